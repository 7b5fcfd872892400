/** Session flow: one live session per controller, at most one move request
 * in flight (input is rejected client-side until the reply lands). */
import { ApiError } from "./api.js";
import { buildHintDisplay } from "./hint.js";
export class SessionController {
    api;
    state = null;
    lastOutcomes = [];
    hint = null;
    inFlight = false;
    constructor(api) {
        this.api = api;
    }
    get busy() {
        return this.inFlight;
    }
    get live() {
        return this.state?.status === "live";
    }
    get humanToMove() {
        return this.live && this.state?.to_move === "human";
    }
    async newGame(spec, seed, humanFirst) {
        this.state = await this.api.createSession(spec, seed, humanFirst);
        this.lastOutcomes = [];
        this.hint = null;
        return this.state;
    }
    /** Submit the human move; resolves with both half-moves of the exchange.
     * Returns null when the click must be ignored (busy, finished, illegal
     * index): those are suppressed client-side, not sent to the server. */
    async play(sent) {
        const state = this.state;
        if (!state || this.inFlight || !this.humanToMove)
            return null;
        if (!state.moves.some((m) => m.index === sent))
            return null;
        this.inFlight = true;
        try {
            const response = await this.api.postMove(state.id, sent);
            this.state = response.state;
            this.hint = null;
            this.lastOutcomes = [
                {
                    player: "human",
                    sent: response.human.sent,
                    landed: response.human.landed,
                    garbled: response.human.sent !== response.human.landed,
                },
            ];
            if (response.engine) {
                this.lastOutcomes.push({
                    player: "engine",
                    sent: response.engine.sent,
                    landed: response.engine.landed,
                    garbled: response.engine.sent !== response.engine.landed,
                });
            }
            return response;
        }
        finally {
            this.inFlight = false;
        }
    }
    /** Fetch and cache the hint overlay for the current position. */
    async loadHint() {
        if (!this.state || !this.live)
            return null;
        const { raw, data } = await this.api.hint(this.state.id);
        this.hint = buildHintDisplay(raw, data);
        return this.hint;
    }
    /** True when a retry might help (transient conflict), false otherwise. */
    static isRetryable(error) {
        return error instanceof ApiError && error.code === "session_busy";
    }
}
