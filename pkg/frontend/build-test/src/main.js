/** Single-page UI: pick a game and p, play through the noisy channel with
 * sent-vs-landed feedback, inspect per-move win probabilities, and explore
 * the value curve with optimal-move bands. */
import { ApiClient, ApiError } from "./api.js";
import { chompCells, describeBoard, nim1Moves } from "./board.js";
import { bandBoundaries, computeMoveBands, curvePoints, DEFAULT_GEOMETRY, pToX, valueToY, xToP, } from "./chart.js";
import { SessionController } from "./controller.js";
const api = new ApiClient();
const controller = new SessionController(api);
let sweepRows = null;
let showHint = false;
function el(tag, className, text) {
    const node = document.createElement(tag);
    if (className)
        node.className = className;
    if (text !== undefined)
        node.textContent = text;
    return node;
}
function byId(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing #${id}`);
    return node;
}
// -- game picker -----------------------------------------------------------
function currentSpec() {
    const family = byId("family").value;
    const p = Number(byId("p-slider").value) / 100;
    if (family === "nim1") {
        return { family: "nim1", chips: Number(byId("chips").value), p };
    }
    if (family === "nim") {
        const piles = byId("piles")
            .value.split(",")
            .map((x) => Number(x.trim()))
            .filter((x) => Number.isFinite(x) && x >= 0);
        return { family: "nim", piles: piles.length ? piles : [2, 2] };
    }
    const variant = byId("variant").value;
    const spec = {
        family: "chomp",
        rows: Number(byId("rows").value),
        cols: Number(byId("cols").value),
        variant,
    };
    if (variant !== "uniform")
        spec.p = p;
    return spec;
}
function sweepParamsFor(spec) {
    if (spec.family === "nim1")
        return { game: "nim1", k: spec.chips };
    if (spec.family === "chomp" && spec.variant !== "uniform") {
        return { game: "chomp", rows: spec.rows, cols: spec.cols, variant: spec.variant };
    }
    return null; // no p to sweep
}
// -- rendering ---------------------------------------------------------------
function renderStatus() {
    const banner = byId("status");
    banner.className = "status";
    const state = controller.state;
    if (!state) {
        banner.textContent = "Pick a game and press New game.";
        return;
    }
    if (state.status === "finished") {
        banner.classList.add(state.winner === "human" ? "won" : "lost");
        banner.textContent =
            state.winner === "human"
                ? "You win: the engine is stuck on a terminal position."
                : "The engine wins: you are stuck on a terminal position.";
        return;
    }
    banner.textContent =
        state.to_move === "human" ? "Your turn - transmit a move." : "Engine is thinking...";
}
function renderChannelReport() {
    const report = byId("channel-report");
    report.replaceChildren();
    for (const outcome of controller.lastOutcomes) {
        const state = controller.state;
        const line = el("div", "channel-line");
        const who = el("span", `who ${outcome.player}`, outcome.player);
        line.append(who);
        const labelOf = (index) => `move ${index}`;
        line.append(el("span", outcome.garbled ? "sent garbled" : "sent", `sent ${labelOf(outcome.sent)}`));
        line.append(el("span", "arrow", "→"));
        line.append(el("span", outcome.garbled ? "landed garbled" : "landed", `landed ${labelOf(outcome.landed)}`));
        if (outcome.garbled)
            line.append(el("span", "badge", "channel error"));
        if (state)
            line.title = "indices refer to the follower list before the move";
        report.append(line);
    }
}
function renderBoard() {
    const host = byId("board");
    host.replaceChildren();
    const state = controller.state;
    if (!state)
        return;
    const board = state.current.board;
    host.append(el("div", "board-caption", describeBoard(board)));
    if (board.kind === "chomp") {
        const grid = el("div", "chomp-grid");
        grid.style.gridTemplateColumns = `repeat(${board.cols}, 44px)`;
        for (let r = board.rows - 1; r >= 0; r--) {
            for (const cell of chompCells(board, state.moves).filter((c) => c.r === r)) {
                const div = el("div", "cell");
                if (!cell.present)
                    div.classList.add("gone");
                if (cell.poisoned) {
                    div.classList.add("poison");
                    div.textContent = "☠";
                }
                if (cell.moveIndex !== null && controller.humanToMove) {
                    div.classList.add("clickable");
                    const moveIndex = cell.moveIndex;
                    div.addEventListener("click", () => void playMove(moveIndex));
                    div.title = `chomp at (${cell.c}, ${cell.r})`;
                }
                grid.append(div);
            }
        }
        host.append(grid);
    }
    else if (board.kind === "nim1") {
        const rowDiv = el("div", "chips");
        for (let i = 0; i < board.chips; i++)
            rowDiv.append(el("span", "chip"));
        host.append(rowDiv);
    }
    else if (board.kind === "nim") {
        const pilesDiv = el("div", "piles");
        board.piles.forEach((count, index) => {
            const pile = el("div", "pile");
            pile.append(el("div", "pile-label", `pile ${index}`));
            const chipsDiv = el("div", "chips");
            for (let i = 0; i < count; i++)
                chipsDiv.append(el("span", "chip"));
            if (count === 0)
                chipsDiv.append(el("span", "empty", "empty"));
            pile.append(chipsDiv);
            pilesDiv.append(pile);
        });
        host.append(pilesDiv);
    }
    else {
        host.append(el("div", "board-caption", board.label));
    }
}
function renderMoves() {
    const host = byId("moves");
    host.replaceChildren();
    const state = controller.state;
    if (!state || state.status !== "live")
        return;
    const hint = showHint ? controller.hint : null;
    const nimViews = state.current.board.kind === "nim1" ? nim1Moves(state.moves) : null;
    state.moves.forEach((move, i) => {
        const button = el("button", "move");
        button.append(el("span", "move-label", move.label));
        if (hint) {
            const value = el("span", "hint-value", hint.valueTexts[i] ?? "");
            if (hint.optimal.includes(move.index)) {
                value.classList.add("optimal");
                button.classList.add("optimal");
            }
            button.append(value);
        }
        button.disabled = !controller.humanToMove || controller.busy;
        button.addEventListener("click", () => void playMove(move.index));
        if (nimViews)
            button.title = `${nimViews[i]?.leaves} chips left if received as sent`;
        host.append(button);
    });
}
function renderHistory() {
    const host = byId("history");
    host.replaceChildren();
    const state = controller.state;
    if (!state)
        return;
    for (const half of state.history) {
        const item = el("li", half.player);
        const garbled = half.sent !== half.landed;
        item.textContent =
            `${half.player}: sent ${half.sent}, landed ${half.landed}` +
                (garbled ? " (channel error)" : "");
        host.append(item);
    }
}
function renderChart() {
    const canvas = byId("chart");
    const ctx = canvas.getContext("2d");
    if (!ctx)
        return;
    const geo = { ...DEFAULT_GEOMETRY, width: canvas.width, height: canvas.height };
    ctx.clearRect(0, 0, geo.width, geo.height);
    if (!sweepRows || sweepRows.length === 0) {
        ctx.fillStyle = "#777";
        ctx.fillText("no sweep for this game (no p parameter)", 20, 30);
        return;
    }
    const bands = computeMoveBands(sweepRows);
    const palette = ["#dbeafe", "#dcfce7", "#fef9c3", "#fde2e2", "#ede9fe"];
    const keyColor = new Map();
    for (const band of bands) {
        if (!keyColor.has(band.key)) {
            keyColor.set(band.key, palette[keyColor.size % palette.length]);
        }
        ctx.fillStyle = keyColor.get(band.key);
        const x0 = pToX(Math.max(0, band.pFrom - 0.005), geo);
        const x1 = pToX(Math.min(1, band.pTo + 0.005), geo);
        ctx.fillRect(x0, geo.padTop, x1 - x0, geo.height - geo.padTop - geo.padBottom);
    }
    for (const boundary of bandBoundaries(bands, sweepRows)) {
        ctx.strokeStyle = "#999";
        ctx.setLineDash([4, 3]);
        ctx.beginPath();
        ctx.moveTo(pToX(boundary, geo), geo.padTop);
        ctx.lineTo(pToX(boundary, geo), geo.height - geo.padBottom);
        ctx.stroke();
        ctx.setLineDash([]);
    }
    // axes and reference line at 1/2
    ctx.strokeStyle = "#444";
    ctx.strokeRect(geo.padLeft, geo.padTop, geo.width - geo.padLeft - geo.padRight, geo.height - geo.padTop - geo.padBottom);
    ctx.strokeStyle = "#bbb";
    ctx.beginPath();
    ctx.moveTo(geo.padLeft, valueToY(0.5, geo));
    ctx.lineTo(geo.width - geo.padRight, valueToY(0.5, geo));
    ctx.stroke();
    ctx.fillStyle = "#444";
    ctx.fillText("1.0", 16, valueToY(1, geo) + 4);
    ctx.fillText("0.5", 16, valueToY(0.5, geo) + 4);
    ctx.fillText("0.0", 16, valueToY(0, geo) + 4);
    ctx.fillText("p = 0", geo.padLeft, geo.height - 8);
    ctx.fillText("1", geo.width - geo.padRight - 8, geo.height - 8);
    // the value curve itself
    ctx.strokeStyle = "#1d4ed8";
    ctx.lineWidth = 1.8;
    ctx.beginPath();
    curvePoints(sweepRows, geo).forEach(([x, y], i) => {
        if (i === 0)
            ctx.moveTo(x, y);
        else
            ctx.lineTo(x, y);
    });
    ctx.stroke();
    ctx.lineWidth = 1;
    // current p marker
    const p = Number(byId("p-slider").value) / 100;
    ctx.strokeStyle = "#dc2626";
    ctx.beginPath();
    ctx.moveTo(pToX(p, geo), geo.padTop);
    ctx.lineTo(pToX(p, geo), geo.height - geo.padBottom);
    ctx.stroke();
    const legend = byId("chart-legend");
    legend.replaceChildren();
    for (const [key, color] of keyColor) {
        const chip = el("span", "legend-chip");
        chip.style.background = color;
        legend.append(chip, el("span", "legend-text", `optimal ${key || "-"}`));
    }
}
function renderAll() {
    renderStatus();
    renderChannelReport();
    renderBoard();
    renderMoves();
    renderHistory();
    renderChart();
}
// -- actions -----------------------------------------------------------------
function reportError(error) {
    const banner = byId("status");
    banner.className = "status error";
    if (error instanceof ApiError) {
        banner.textContent =
            error.code === "session_busy"
                ? "A move is already in flight - try again."
                : `${error.code}: ${error.message}`;
    }
    else {
        banner.textContent = String(error);
    }
}
async function playMove(sent) {
    try {
        const response = await controller.play(sent);
        if (response && showHint && controller.live)
            await controller.loadHint();
        renderAll();
    }
    catch (error) {
        reportError(error);
    }
}
async function newGame() {
    const seedInput = byId("seed");
    const seed = seedInput.value === "" ? Math.floor(Math.random() * 2 ** 31) : Number(seedInput.value);
    seedInput.placeholder = String(seed);
    try {
        await controller.newGame(currentSpec(), seed, byId("human-first").checked);
        if (showHint && controller.live)
            await controller.loadHint();
        renderAll();
    }
    catch (error) {
        reportError(error);
    }
}
async function refreshSweep() {
    const params = sweepParamsFor(currentSpec());
    try {
        sweepRows = params ? await api.sweep(params) : null;
    }
    catch (error) {
        sweepRows = null;
        reportError(error);
    }
    renderChart();
}
function wire() {
    byId("new-game").addEventListener("click", () => void newGame());
    byId("p-slider").addEventListener("input", () => {
        byId("p-value").textContent = (Number(byId("p-slider").value) / 100).toFixed(2);
        renderChart();
    });
    // releasing the slider re-creates the session at the chosen p
    byId("p-slider").addEventListener("change", () => void newGame());
    byId("family").addEventListener("change", () => {
        const family = byId("family").value;
        byId("nim1-params").hidden = family !== "nim1";
        byId("nim-params").hidden = family !== "nim";
        byId("chomp-params").hidden = family !== "chomp";
        void refreshSweep();
    });
    for (const id of ["chips", "rows", "cols", "variant"]) {
        byId(id).addEventListener("change", () => void refreshSweep());
    }
    byId("hint-toggle").addEventListener("click", () => {
        showHint = !showHint;
        byId("hint-toggle").textContent = showHint
            ? "Hide hints"
            : "Show hints";
        const done = showHint && controller.live && !controller.hint
            ? controller.loadHint()
            : Promise.resolve(null);
        void done.then(() => renderMoves()).catch(reportError);
    });
    byId("chart").addEventListener("click", (event) => {
        const canvas = byId("chart");
        const rect = canvas.getBoundingClientRect();
        const geo = { ...DEFAULT_GEOMETRY, width: canvas.width, height: canvas.height };
        const p = xToP(((event.clientX - rect.left) / rect.width) * canvas.width, geo);
        byId("p-slider").value = String(Math.round(p * 100));
        byId("p-value").textContent = p.toFixed(2);
        void newGame();
    });
}
wire();
void refreshSweep().then(() => newGame());
