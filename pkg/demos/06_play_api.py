"""Playing against the engine over the HTTP API, in process.

The same app that `splittergame serve` exposes, driven here through an
in-process test client: create a session as the connector on P5, watch the
engine's splitter replies, and finish within the promised two rounds.
"""

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent.parent / "src"))

from starlette.testclient import TestClient

from splittergame.service import create_app

client = TestClient(create_app())

p5 = {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4]]}
resp = client.post("/api/games", json={"graph": p5, "radius": 1, "human_role": "connector"})
game_id = resp.json()["game_id"]
state = resp.json()["state"]
print(f"session {game_id}: arena {state['arena']}, splitter promises "
      f"to win within {state['initial_rank']} rounds")

round_no = 1
while not state["finished"]:
    my_move = state["arena"][len(state["arena"]) // 2]  # play the middle-ish vertex
    resp = client.post(f"/api/games/{game_id}/move", json={"vertex": my_move})
    payload = resp.json()
    state = payload["state"]
    print(f"round {round_no}: connector {my_move} -> engine deletes "
          f"{payload['engine_reply']}, arena now {state['arena']}")
    round_no += 1

print(f"finished in {state['winner_round']} rounds "
      f"(promised <= {state['initial_rank']})")

# The splitter seat comes with live what-if analysis before committing.
resp = client.post("/api/games", json={"graph": p5, "radius": 1, "human_role": "splitter"})
game_id = resp.json()["game_id"]
state = resp.json()["state"]
print(f"\nnow as splitter: engine opened with connector {state['pending_connector']}, "
      f"ball {state['ball']}")
for v in state["arena"]:
    hint = client.get(f"/api/games/{game_id}/whatif", params={"vertex": v}).json()
    note = "progressing!" if hint["progressing"] else ""
    print(f"  deleting {v} -> rank {hint['resulting_rank']} {note}")
