"""HTTP service: game lifecycle, phase errors, replay determinism, the
analyze endpoint, and snapshot persistence."""

import json
import threading
import urllib.error
import urllib.request

import pytest

from dequesort import dek, webservice
from dequesort.dek import End
from dequesort.webservice import GameStore, make_server

COUNTEREXAMPLE_DEAL = [7, 5, 2, 6, 4, 3, 1]


@pytest.fixture()
def server():
    srv = make_server(port=0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    yield srv
    srv.shutdown()


def call(srv, method, path, body=None):
    port = srv.server_address[1]
    data = json.dumps(body).encode() if body is not None else None
    req = urllib.request.Request(
        f"http://127.0.0.1:{port}{path}", data=data, method=method
    )
    if data:
        req.add_header("Content-Type", "application/json")
    try:
        with urllib.request.urlopen(req) as resp:
            return resp.status, json.loads(resp.read())
    except urllib.error.HTTPError as exc:
        return exc.code, json.loads(exc.read())


class TestGameFlow:
    def test_counterexample_deal_walkthrough(self, server):
        status, game = call(server, "POST", "/api/games", {"deal": COUNTEREXAMPLE_DEAL})
        assert status == 200
        gid = game["id"]
        assert game["state"]["deck_remaining"] == 7
        assert "deal" not in json.dumps(game)

        status, r = call(server, "POST", f"/api/games/{gid}/reveal", {})
        assert (status, r["revealed"], r["substantive"]) == (200, 7, False)
        call(server, "POST", f"/api/games/{gid}/place", {"end": "left"})
        status, r = call(server, "POST", f"/api/games/{gid}/reveal", {})
        assert r["revealed"] == 5 and not r["substantive"]
        call(server, "POST", f"/api/games/{gid}/place", {"end": "left"})

        status, r = call(server, "POST", f"/api/games/{gid}/reveal", {})
        assert r["revealed"] == 2
        assert r["substantive"] is True and r["substantive_oracle"] is True
        advice = r["advice"]
        assert advice["s1"]["recommended"] == "left"
        assert (advice["s1"]["winnable_left"], advice["s1"]["winnable_right"]) == (15, 11)
        assert advice["s2"]["recommended"] == "left"

        # follow strategy 1 to the end and win
        choice = advice["s1"]["recommended"]
        while True:
            status, r = call(server, "POST", f"/api/games/{gid}/place", {"end": choice})
            assert status == 200
            if r["finished"]:
                assert r["won"] is True
                break
            status, r = call(server, "POST", f"/api/games/{gid}/reveal", {})
            assert status == 200
            if r["state"]["finished"]:
                assert r["state"]["won"] is True
                break
            adv = r.get("advice")
            choice = adv["s1"]["recommended"] if isinstance(adv, dict) else "left"

    def test_identity_deal_always_wins(self, server):
        _, game = call(server, "POST", "/api/games", {"deal": [1, 2, 3, 4]})
        gid = game["id"]
        finished = False
        while not finished:
            _, r = call(server, "POST", f"/api/games/{gid}/reveal", {})
            finished = r["state"]["finished"]
            assert r.get("auto_output") is True  # every card pops straight out
        _, summary = call(server, "GET", f"/api/games/{gid}")
        assert summary["won"] is True

    def test_reveal_order_matches_deal(self, server):
        _, game = call(server, "POST", "/api/games", {"deal": [3, 1, 2]})
        gid = game["id"]
        seen = []
        while True:
            _, r = call(server, "POST", f"/api/games/{gid}/reveal", {})
            seen.append(r["revealed"])
            if r["state"]["revealed"] is not None:
                call(server, "POST", f"/api/games/{gid}/place", {"end": "right"})
            if r["state"]["finished"] or len(seen) == 3:
                if r["state"]["finished"]:
                    break
        assert seen == [3, 1, 2]

    def test_seeded_games_are_reproducible(self, server):
        _, a = call(server, "POST", "/api/games", {"n": 9, "seed": 42})
        _, b = call(server, "POST", "/api/games", {"n": 9, "seed": 42})
        ra = call(server, "POST", f"/api/games/{a['id']}/reveal", {})[1]["revealed"]
        rb = call(server, "POST", f"/api/games/{b['id']}/reveal", {})[1]["revealed"]
        assert ra == rb


class TestErrors:
    def test_unknown_game_404(self, server):
        status, body = call(server, "GET", "/api/games/missing")
        assert status == 404 and "error" in body

    def test_place_before_reveal_409(self, server):
        _, game = call(server, "POST", "/api/games", {"n": 3, "seed": 1})
        status, _ = call(server, "POST", f"/api/games/{game['id']}/place", {"end": "left"})
        assert status == 409

    def test_double_reveal_409(self, server):
        _, game = call(server, "POST", "/api/games", {"deal": [3, 1, 2]})
        call(server, "POST", f"/api/games/{game['id']}/reveal", {})
        status, _ = call(server, "POST", f"/api/games/{game['id']}/reveal", {})
        assert status == 409

    def test_place_on_finished_409(self, server):
        _, game = call(server, "POST", "/api/games", {"deal": [1]})
        call(server, "POST", f"/api/games/{game['id']}/reveal", {})
        status, _ = call(server, "POST", f"/api/games/{game['id']}/place", {"end": "left"})
        assert status == 409

    def test_bad_body_422(self, server):
        status, _ = call(server, "POST", "/api/games", {"n": 0})
        assert status == 422
        _, game = call(server, "POST", "/api/games", {"deal": [2, 1]})
        call(server, "POST", f"/api/games/{game['id']}/reveal", {})
        status, _ = call(server, "POST", f"/api/games/{game['id']}/place", {"end": "up"})
        assert status == 422

    def test_bad_deal_422(self, server):
        status, _ = call(server, "POST", "/api/games", {"deal": [1, 1]})
        assert status == 422

    def test_analyze_validation(self, server):
        status, _ = call(server, "POST", "/api/analyze", {"deque": [2, 2], "output_next": 1})
        assert status == 422


class TestAnalyze:
    def test_counterexample_midstate(self, server):
        status, body = call(
            server, "POST", "/api/analyze",
            {"deque": [2, 5, 7], "output_next": 1, "input_rest": [6, 4, 3, 1]},
        )
        assert (status, body) == (200, {"sortable": True})

    def test_trapped(self, server):
        status, body = call(
            server, "POST", "/api/analyze",
            {"deque": [4, 1, 6], "output_next": 1, "input_rest": [2, 3, 5]},
        )
        assert (status, body) == (200, {"sortable": False})


class TestStaticUi:
    def test_serves_ui_dir_when_given(self, tmp_path):
        (tmp_path / "index.html").write_text("<html>board</html>")
        srv = make_server(port=0, ui_dir=str(tmp_path))
        thread = threading.Thread(target=srv.serve_forever, daemon=True)
        thread.start()
        try:
            port = srv.server_address[1]
            with urllib.request.urlopen(f"http://127.0.0.1:{port}/") as resp:
                assert b"board" in resp.read()
            status, _ = call(srv, "GET", "/missing.js")
            assert status == 404
            status, _ = call(srv, "POST", "/api/games", {"n": 3, "seed": 1})
            assert status == 200  # API still routed
        finally:
            srv.shutdown()

    def test_api_only_without_ui_dir(self, server):
        status, _ = call(server, "GET", "/")
        assert status == 404


class TestReplayAndPersistence:
    def test_history_replays_to_current_state(self, server):
        _, game = call(server, "POST", "/api/games", {"deal": COUNTEREXAMPLE_DEAL})
        gid = game["id"]
        for end in ("left", "left", "right"):
            call(server, "POST", f"/api/games/{gid}/reveal", {})
            call(server, "POST", f"/api/games/{gid}/place", {"end": end})
        _, summary = call(server, "GET", f"/api/games/{gid}")

        state = dek.initial_state(7)
        for event in summary["history"]:
            if event["type"] == "reveal":
                state = dek.reveal(state, event["value"])
                if event.get("auto_output"):
                    state = dek.place(state, End.LEFT)
            else:
                state = dek.place(state, End(event["end"]))
        assert list(state.deque) == summary["state"]["deque"]
        assert state.output_next == summary["state"]["output_next"]

    def test_state_file_round_trip(self, tmp_path):
        path = tmp_path / "games.json"
        store = GameStore(str(path))
        record = store.create(0, None, COUNTEREXAMPLE_DEAL)
        store.reveal(record.id)
        store.place(record.id, "left")
        store.reveal(record.id)

        reloaded = GameStore(str(path))
        fresh = reloaded.describe(record.id)
        assert fresh["state"]["deque"] == [7]
        assert fresh["state"]["revealed"] == 5
        assert len(fresh["history"]) == 3
