/** The hint overlay must show the solver's numbers byte for byte. */
import assert from "node:assert/strict";
import { readFileSync } from "node:fs";
import { test } from "node:test";
import { fileURLToPath } from "node:url";
import { buildHintDisplay, extractMoveValueTexts } from "../src/hint.js";
const fixturePath = fileURLToPath(new URL("../../tests/fixtures/hint_nim1_k3_p03.json", import.meta.url));
const raw = readFileSync(fixturePath, "utf-8");
test("rendered hint values are byte-equal to the payload", () => {
    const display = buildHintDisplay(raw);
    assert.equal(display.valueTexts.length, 3);
    for (const text of display.valueTexts) {
        assert.ok(raw.includes(text), `${text} not a literal substring of the payload`);
    }
    // and they are exactly the serialized numbers, in order
    const expected = raw
        .slice(raw.indexOf("[") + 1, raw.indexOf("]"))
        .split(",")
        .map((s) => s.trim());
    assert.deepEqual(display.valueTexts, expected);
});
test("extracted texts parse to the same numbers the payload parses to", () => {
    const payload = JSON.parse(raw);
    const display = buildHintDisplay(raw, payload);
    assert.deepEqual(display.valueTexts.map(Number), payload.move_values);
    assert.deepEqual(display.optimal, payload.optimal_moves);
    assert.deepEqual(display.moves, payload.moves);
});
test("no client-side recomputation: values come only from the payload", () => {
    const doctored = raw.replace("0.6076923076923076", "0.1234567890123456");
    const display = buildHintDisplay(doctored);
    assert.equal(display.valueTexts[0], "0.1234567890123456");
});
test("empty move_values array extracts cleanly", () => {
    assert.deepEqual(extractMoveValueTexts('{"move_values":[],"optimal_moves":[],"moves":[]}'), []);
});
