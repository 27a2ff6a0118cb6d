"""Play sessions and the HTTP API: state machine, wire shapes, error paths."""

from __future__ import annotations

import itertools
import json
from pathlib import Path

import pytest
from starlette.testclient import TestClient

from splittergame import EngineConfig, FamilySpec, Graph, RankEngine, SplitMix64, generate
from splittergame.service import Game, GameConfig, PlayError, PlayService, create_app

GOLDEN = Path(__file__).parent / "golden"

P3 = {"n": 3, "edges": [[0, 1], [1, 2]]}


def make_client(**kwargs) -> TestClient:
    counter = itertools.count(1)
    service = PlayService(id_factory=lambda: f"g{next(counter):06d}", **kwargs)
    return TestClient(create_app(service))


def golden(name: str) -> bytes:
    return (GOLDEN / name).read_bytes()


# -- Game state machine ---------------------------------------------------------


def game_for(graph: Graph, radius: int = 1, role: str = "connector", **kwargs) -> Game:
    return Game(GameConfig(graph, radius, role), **kwargs)


def test_new_game_k1():
    g = game_for(Graph(1))
    assert g.round == 1 and g.phase == "awaiting_connector"
    assert g.arena.vertices() == [0]
    assert g.initial_rank == 1


def test_new_game_rejects_empty_graph():
    with pytest.raises(ValueError):
        GameConfig(Graph(0), 1)
    with pytest.raises(ValueError):
        GameConfig(Graph(1), 0)
    with pytest.raises(ValueError):
        GameConfig(Graph(1), 1, "referee")


def test_k1_full_round():
    g = game_for(Graph(1))
    g.apply_move(0)
    assert g.phase == "awaiting_splitter"
    assert g.legal_moves() == {0: False}
    g.apply_move(0)
    assert g.finished and g.winner_round == 1
    assert g.history == [(0, 0)]


def test_p3_ball_restriction_and_moves():
    p3 = Graph(3, [(0, 1), (1, 2)])
    g = game_for(p3)
    g.apply_move(1)
    assert sorted(v for v, dom in g.legal_moves().items()) == [0, 1, 2]
    assert not any(g.legal_moves().values())  # ball is everything
    g.apply_move(1)
    assert g.arena.vertices() == [0, 2]
    assert g.round == 2 and not g.finished


def test_p3_splitter_keeps_edge():
    p3 = Graph(3, [(0, 1), (1, 2)])
    g = game_for(p3)
    g.apply_move(1)
    g.apply_move(0)
    assert g.arena.vertices() == [1, 2]
    assert g.arena.edges() == [(1, 2)]


def test_dominated_annotation_on_p5():
    p5 = generate(FamilySpec("path", {"n": 5}))
    g = game_for(p5)
    g.apply_move(0)
    dominated = {v for v, dom in g.legal_moves().items() if dom}
    assert dominated == {2, 3, 4}  # ball is {0,1}


def test_moves_rejected_when_finished_or_illegal():
    g = game_for(Graph(1))
    with pytest.raises(PlayError) as exc:
        g.apply_move(5)
    assert exc.value.status == 400
    g.apply_move(0)
    g.apply_move(0)
    with pytest.raises(PlayError) as exc:
        g.apply_move(0)
    assert exc.value.status == 409
    with pytest.raises(PlayError):
        g.legal_moves()


def test_engine_splitter_reply_is_argmin():
    p3 = Graph(3, [(0, 1), (1, 2)])
    g = game_for(p3)
    assert g.play_human(1) == 1  # unique argmin: delete the middle


def test_engine_connector_opens_on_creation():
    p3 = Graph(3, [(0, 1), (1, 2)])
    g = game_for(p3, role="splitter")
    assert g.phase == "awaiting_splitter"
    assert g.pending_connector == 0  # all moves optimal, smallest id
    assert g.history == []


def test_what_if_values_on_p3():
    p3 = Graph(3, [(0, 1), (1, 2)])
    g = game_for(p3)
    g.apply_move(1)
    assert g.what_if(1) == (1, True)
    assert g.what_if(0) == (2, False)


def test_what_if_outside_ball_is_noop():
    p5 = generate(FamilySpec("path", {"n": 5}))
    g = game_for(p5)
    g.apply_move(0)  # ball {0,1}, rank 2
    assert g.what_if(4) == (2, False)


def test_what_if_phase_and_analysis_guards():
    p3 = Graph(3, [(0, 1), (1, 2)])
    g = game_for(p3)
    with pytest.raises(PlayError) as exc:
        g.what_if(0)
    assert exc.value.status == 409 and exc.value.code == "wrong_phase"
    g2 = Game(GameConfig(p3, 1, "connector", analysis_enabled=False))
    g2.apply_move(1)
    with pytest.raises(PlayError) as exc:
        g2.what_if(1)
    assert exc.value.code == "analysis_disabled"
    g3 = game_for(p3, analysis_limit=2)
    g3.apply_move(1)
    with pytest.raises(PlayError) as exc:
        g3.what_if(1)
    assert exc.value.code == "analysis_disabled"


def test_what_if_dichotomy():
    g = generate(FamilySpec("gnp", {"n": 7, "p": 0.5}, seed=3))
    game = game_for(g, radius=1)
    game.apply_move(0)
    ball_rank = game.engine.rank_of_mask(game.ball)
    for v in game.arena.vertices():
        rank, progressing = game.what_if(v)
        assert rank in (ball_rank - 1, ball_rank)
        assert progressing == (rank < ball_rank)


def test_engine_vs_engine_lasts_exactly_rank_rounds():
    for spec, r in [
        (FamilySpec("complete", {"n": 4}), 1),
        (FamilySpec("path", {"n": 7}), 1),
        (FamilySpec("cycle", {"n": 6}), 2),
        (FamilySpec("gnp", {"n": 8, "p": 0.4}, seed=2), 1),
    ]:
        graph = generate(spec)
        game = game_for(graph, radius=r)
        rank = game.initial_rank
        while not game.finished:
            game.apply_move(game.best_move())
        assert game.winner_round == rank


def test_engine_splitter_beats_random_connector_within_rank():
    graph = generate(FamilySpec("gnp", {"n": 8, "p": 0.4}, seed=5))
    rank = RankEngine(graph, EngineConfig(radius=1)).rank()
    for seed in range(10):
        rng = SplitMix64(seed)
        game = game_for(graph, radius=1)
        while not game.finished:
            vertices = game.arena.vertices()
            game.play_human(vertices[rng.next_below(len(vertices))])
        assert game.winner_round <= rank


def test_arena_shrinks_every_round_against_engine():
    graph = generate(FamilySpec("grid", {"rows": 3, "cols": 3}))
    game = game_for(graph, radius=1)
    rng = SplitMix64(7)
    sizes = [len(game.arena)]
    while not game.finished:
        vertices = game.arena.vertices()
        game.play_human(vertices[rng.next_below(len(vertices))])
        sizes.append(len(game.arena))
    assert all(b < a for a, b in zip(sizes, sizes[1:]))
    assert len(sizes) - 1 <= graph.n


def test_state_dict_invariants():
    p3 = Graph(3, [(0, 1), (1, 2)])
    g = game_for(p3)
    state = g.state_dict()
    assert (state["phase"] == "awaiting_splitter") == (state["pending_connector"] is not None)
    assert (state["pending_connector"] is not None) == (state["ball"] is not None)
    g.apply_move(1)
    state = g.state_dict()
    assert state["pending_connector"] == 1 and state["ball"] == [0, 1, 2]
    assert len(state["history"]) == 0


# -- HTTP API: golden byte-compatible round trips ----------------------------------


def test_api_connector_flow_golden():
    client = make_client()
    resp = client.post(
        "/api/games",
        json={"graph": P3, "radius": 1, "human_role": "connector", "analysis": True},
    )
    assert resp.status_code == 201
    assert resp.content == golden("create_connector_p3.json")

    resp = client.get("/api/games/g000001")
    assert resp.status_code == 200
    assert resp.content == golden("get_connector_p3.json")

    resp = client.post("/api/games/g000001/move", json={"vertex": 1})
    assert resp.status_code == 200
    assert resp.content == golden("move1_connector_p3.json")

    resp = client.post("/api/games/g000001/move", json={"vertex": 0})
    assert resp.status_code == 200
    assert resp.content == golden("move2_connector_p3.json")

    resp = client.delete("/api/games/g000001")
    assert resp.status_code == 204
    assert resp.content == b""


def test_api_splitter_flow_golden():
    client = make_client()
    resp = client.post(
        "/api/games",
        json={"graph": P3, "radius": 1, "human_role": "splitter", "analysis": True},
    )
    assert resp.status_code == 201
    assert resp.content == golden("create_splitter_p3.json")

    resp = client.get("/api/games/g000001/whatif", params={"vertex": 0})
    assert resp.status_code == 200
    assert resp.content == golden("whatif_progressing.json")

    resp = client.get("/api/games/g000001/whatif", params={"vertex": 2})
    assert resp.status_code == 200
    assert resp.content == golden("whatif_dominated.json")

    resp = client.post("/api/games/g000001/move", json={"vertex": 1})
    assert resp.status_code == 200
    assert resp.content == golden("move1_splitter_p3.json")

    resp = client.post("/api/games/g000001/move", json={"vertex": 0})
    assert resp.status_code == 200
    assert resp.content == golden("move2_splitter_p3.json")


def test_api_error_paths():
    client = make_client()
    assert client.get("/api/games/nope").status_code == 404
    assert client.delete("/api/games/nope").status_code == 404

    resp = client.post("/api/games", json={"graph": P3, "radius": 0, "human_role": "connector"})
    assert resp.status_code == 400
    resp = client.post("/api/games", json={"graph": {"n": 0, "edges": []}, "radius": 1})
    assert resp.status_code == 400
    resp = client.post("/api/games", json={"graph": {"n": 2, "edges": [[0, 0]]}, "radius": 1})
    assert resp.status_code == 400

    client.post("/api/games", json={"graph": P3, "radius": 1})
    resp = client.post("/api/games/g000001/move", json={"vertex": 9})
    assert resp.status_code == 400
    assert resp.json() == {"error": "illegal_move"}
    resp = client.post("/api/games/g000001/move", json={"vertex": "zero"})
    assert resp.status_code == 400

    # what-if is a splitter-phase query; a connector-to-move game is in the wrong phase
    resp = client.get("/api/games/g000001/whatif", params={"vertex": 0})
    assert resp.status_code == 409
    assert resp.json() == {"error": "wrong_phase"}
    resp = client.get("/api/games/g000001/whatif")
    assert resp.status_code == 400

    # finish the game, then any further move is a phase error
    client.post("/api/games/g000001/move", json={"vertex": 1})
    client.post("/api/games/g000001/move", json={"vertex": 0})
    resp = client.post("/api/games/g000001/move", json={"vertex": 0})
    assert resp.status_code == 409


def test_api_analysis_disabled_flag():
    client = make_client()
    client.post(
        "/api/games",
        json={"graph": P3, "radius": 1, "human_role": "splitter", "analysis": False},
    )
    resp = client.get("/api/games/g000001/whatif", params={"vertex": 0})
    assert resp.status_code == 409
    assert resp.json() == {"error": "analysis_disabled"}


def test_api_vertex_limit():
    client = make_client(vertex_limit=4)
    resp = client.post(
        "/api/games",
        json={"graph": {"n": 6, "edges": []}, "radius": 1, "human_role": "connector"},
    )
    assert resp.status_code == 400
    assert resp.json() == {"error": "graph_too_large"}


def test_api_session_expiry():
    clock_value = [0.0]
    service = PlayService(
        idle_timeout=10.0,
        id_factory=lambda: "fixed",
        clock=lambda: clock_value[0],
    )
    client = TestClient(create_app(service))
    client.post("/api/games", json={"graph": P3, "radius": 1})
    assert client.get("/api/games/fixed").status_code == 200
    clock_value[0] = 11.0
    assert client.get("/api/games/fixed").status_code == 404


def test_api_sessions_are_isolated():
    client = make_client()
    client.post("/api/games", json={"graph": P3, "radius": 1})
    client.post("/api/games", json={"graph": {"n": 1, "edges": []}, "radius": 1})
    state1 = client.get("/api/games/g000001").json()["state"]
    state2 = client.get("/api/games/g000002").json()["state"]
    assert state1["arena"] == [0, 1, 2]
    assert state2["arena"] == [0]
    client.post("/api/games/g000002/move", json={"vertex": 0})
    assert client.get("/api/games/g000001").json()["state"]["round"] == 1
