#!/usr/bin/env python3
"""Regenerate the frontend's API fixtures from the live service contract.

Run from the repo root after changing any /api/v1 payload shape:

    python3 scripts/generate_frontend_fixtures.py
"""

import pathlib

from fastapi.testclient import TestClient

from noisygames.server import create_app

OUT = pathlib.Path(__file__).resolve().parent.parent / "frontend" / "tests" / "fixtures"


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    client = TestClient(create_app())

    sweep = client.get("/api/v1/sweep", params={"game": "nim1", "k": 5, "points": 101})
    (OUT / "sweep_nim1_k5_101.json").write_bytes(sweep.content)

    session = client.post(
        "/api/v1/sessions",
        json={"spec": {"family": "nim1", "chips": 3, "p": 0.3}, "seed": 7,
              "human_first": True},
    )
    (OUT / "session_nim1_k3_p03.json").write_bytes(session.content)
    sid = session.json()["id"]
    hint = client.get(f"/api/v1/sessions/{sid}/hint")
    (OUT / "hint_nim1_k3_p03.json").write_bytes(hint.content)

    chomp = client.post(
        "/api/v1/sessions",
        json={"spec": {"family": "chomp", "rows": 2, "cols": 2, "variant": "n8",
                       "p": 0.5}, "seed": 3, "human_first": True},
    )
    (OUT / "session_chomp_2x2_p05.json").write_bytes(chomp.content)

    for name in ("sweep_nim1_k5_101", "session_nim1_k3_p03", "hint_nim1_k3_p03",
                 "session_chomp_2x2_p05"):
        print(f"wrote {OUT / name}.json")


if __name__ == "__main__":
    main()
