"""Record real HTTP API responses as fixtures for the web UI tests.

Starts the bundled-example server on an ephemeral port, walks the
canonical seven-step run, and saves every response under
frontend/fixtures/.  Rerun after changing the API or the bundled net.
"""

import json
import threading
import urllib.error
import urllib.request
from pathlib import Path

from petrikit import bakingsoda_net
from petrikit.server import PetrikitServer

FIXTURES = Path(__file__).resolve().parent.parent / "frontend" / "fixtures"
RUN = ["T0", "T1", "T2", "T4", "T5", "T6", "T7"]


def get(url):
    with urllib.request.urlopen(url) as resp:
        return json.loads(resp.read())


def post(url, payload=None):
    data = json.dumps(payload).encode() if payload is not None else b""
    req = urllib.request.Request(url, data=data, method="POST")
    with urllib.request.urlopen(req) as resp:
        return json.loads(resp.read())


def post_expect_error(url, payload):
    data = json.dumps(payload).encode()
    req = urllib.request.Request(url, data=data, method="POST")
    try:
        with urllib.request.urlopen(req) as resp:
            raise AssertionError(f"expected an error response, got {resp.status}")
    except urllib.error.HTTPError as err:
        return err.code, json.loads(err.read())


def main():
    FIXTURES.mkdir(parents=True, exist_ok=True)
    server = PetrikitServer(("127.0.0.1", 0), net=bakingsoda_net())
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    base = f"http://127.0.0.1:{server.server_address[1]}"
    try:
        dump("analysis", get(f"{base}/api/analysis"))
        dump("state_0", get(f"{base}/api/state"))
        code, body = post_expect_error(f"{base}/api/fire", {"transition": "T2"})
        assert code == 409, code
        dump("fire_T2_conflict", body)
        for i, t in enumerate(RUN, start=1):
            state = post(f"{base}/api/fire", {"transition": t})
            dump(f"state_{i}", state)
    finally:
        server.shutdown()
        server.server_close()
    print(f"fixtures written to {FIXTURES}")


def dump(name, payload):
    path = FIXTURES / f"{name}.json"
    path.write_text(json.dumps(payload, indent=2) + "\n", encoding="utf-8")
    print(f"  {path.name}")


if __name__ == "__main__":
    main()
