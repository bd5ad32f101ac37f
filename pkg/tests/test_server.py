import json
import threading
import urllib.error
import urllib.request

import pytest

import golden
from petrikit import bakingsoda_net, bakingsoda_text
from petrikit.server import PetrikitServer


@pytest.fixture(scope="module")
def server_url():
    server = PetrikitServer(("127.0.0.1", 0), net=bakingsoda_net())
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    server.server_close()


def call(url, method="GET", body=None, headers=None):
    data = body.encode("utf-8") if isinstance(body, str) else body
    request = urllib.request.Request(url, data=data, method=method, headers=headers or {})
    try:
        with urllib.request.urlopen(request) as resp:
            return resp.status, resp.read(), resp.headers.get("Content-Type", "")
    except urllib.error.HTTPError as err:
        return err.code, err.read(), err.headers.get("Content-Type", "")


def get_json(url):
    status, raw, ctype = call(url)
    assert "json" in ctype
    return status, json.loads(raw)


@pytest.fixture(autouse=True)
def fresh_state(server_url):
    call(f"{server_url}/api/reset", method="POST")
    yield


class TestState:
    def test_initial_state(self, server_url):
        status, state = get_json(f"{server_url}/api/state")
        assert status == 200
        assert state["enabled"] == ["T0", "T1"]
        assert state["deadlocked"] is False
        assert state["history"] == []
        assert state["marking"]["P0"] == 1
        assert sum(state["marking"].values()) == 5

    def test_places_order_is_declaration_order(self, server_url):
        _, state = get_json(f"{server_url}/api/state")
        assert state["places"] == golden.PLACE_ORDER


class TestFire:
    def test_fire_enabled(self, server_url):
        status, raw, _ = call(
            f"{server_url}/api/fire", method="POST", body=json.dumps({"transition": "T0"})
        )
        assert status == 200
        state = json.loads(raw)
        assert state["history"] == ["T0"]
        assert state["marking"]["P3"] == 1
        assert state["enabled"] == ["T1", "T4"]

    def test_fire_disabled_is_409_with_deficient(self, server_url):
        status, raw, _ = call(
            f"{server_url}/api/fire", method="POST", body=json.dumps({"transition": "T2"})
        )
        assert status == 409
        body = json.loads(raw)
        assert body["deficient"] == ["P4", "P5"]

    def test_unknown_transition_is_400(self, server_url):
        status, _, _ = call(
            f"{server_url}/api/fire", method="POST", body=json.dumps({"transition": "T9"})
        )
        assert status == 400

    def test_bad_body_is_400(self, server_url):
        status, _, _ = call(f"{server_url}/api/fire", method="POST", body="not json")
        assert status == 400

    def test_full_run_reaches_deadlock(self, server_url):
        for t in golden.DEADLOCK_PATH:
            status, raw, _ = call(
                f"{server_url}/api/fire", method="POST", body=json.dumps({"transition": t})
            )
            assert status == 200
        state = json.loads(raw)
        assert state["deadlocked"] is True
        assert state["history"] == list(golden.DEADLOCK_PATH)
        assert state["enabled"] == []


class TestUndoReset:
    def test_undo_after_fire_is_identity(self, server_url):
        _, before = get_json(f"{server_url}/api/state")
        call(f"{server_url}/api/fire", method="POST", body=json.dumps({"transition": "T0"}))
        status, raw, _ = call(f"{server_url}/api/undo", method="POST")
        assert status == 200
        assert json.loads(raw) == before

    def test_reset_restores_initial(self, server_url):
        call(f"{server_url}/api/fire", method="POST", body=json.dumps({"transition": "T0"}))
        status, raw, _ = call(f"{server_url}/api/reset", method="POST")
        state = json.loads(raw)
        assert state["history"] == []
        assert state["marking"]["P0"] == 1


class TestNetUpload:
    def test_replace_with_dsl(self, server_url):
        status, raw, _ = call(
            f"{server_url}/api/net", method="POST",
            body="net two\nplace a tokens 1\ntrans t\narc a -> t\n",
        )
        assert status == 200
        assert json.loads(raw)["net"] == "two"
        # Restore the bundled net for the other tests.
        call(f"{server_url}/api/net", method="POST", body=bakingsoda_text())

    def test_bad_input_is_400_with_location(self, server_url):
        status, raw, _ = call(f"{server_url}/api/net", method="POST", body="bogus line\n")
        assert status == 400
        body = json.loads(raw)
        assert "error" in body
        assert body.get("line") == 1

    def test_pnml_upload(self, server_url):
        from petrikit import write_pnml

        status, raw, _ = call(
            f"{server_url}/api/net", method="POST", body=write_pnml(bakingsoda_net())
        )
        assert status == 200
        assert json.loads(raw)["net"] == "bakingsoda"


class TestAnalysisAndDot:
    def test_analysis_matches_library(self, server_url):
        status, payload = get_json(f"{server_url}/api/analysis")
        assert status == 200
        assert payload["stateSpace"]["stateCount"] == golden.STATE_COUNT
        assert payload["stateSpace"]["deadlockPath"] == list(golden.DEADLOCK_PATH)
        assert len(payload["pInvariants"]) == golden.SEMIFLOW_COUNT

    def test_dot_net(self, server_url):
        status, raw, ctype = call(f"{server_url}/api/dot?kind=net")
        assert status == 200
        assert "graphviz" in ctype
        assert raw.decode().count("shape=circle") == 18

    def test_dot_reach(self, server_url):
        status, raw, _ = call(f"{server_url}/api/dot?kind=reach")
        assert status == 200
        assert raw.decode().count("shape=ellipse") == golden.STATE_COUNT

    def test_dot_bad_kind(self, server_url):
        status, _, _ = call(f"{server_url}/api/dot?kind=wat")
        assert status == 400

    def test_unknown_endpoint_404(self, server_url):
        status, _, _ = call(f"{server_url}/api/nope")
        assert status == 404

    def test_static_root_served(self, server_url):
        status, raw, ctype = call(f"{server_url}/")
        assert status == 200
        assert "html" in ctype


class TestNoNetLoaded:
    def test_endpoints_refuse_without_net(self):
        server = PetrikitServer(("127.0.0.1", 0), net=None)
        thread = threading.Thread(target=server.serve_forever, daemon=True)
        thread.start()
        url = f"http://127.0.0.1:{server.server_address[1]}"
        try:
            status, _, _ = call(f"{url}/api/state")
            assert status == 400
            status, _, _ = call(f"{url}/api/fire", method="POST",
                                body=json.dumps({"transition": "T0"}))
            assert status == 400
        finally:
            server.shutdown()
            server.server_close()
