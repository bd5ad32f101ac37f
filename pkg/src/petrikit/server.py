"""JSON/HTTP interface around one in-memory token-game session.

Endpoints (all JSON unless noted):
    POST /api/net        replace the session net (body: DSL or PNML text)
    GET  /api/state      marking, history, enabled set, deadlocked flag
    POST /api/fire       {"transition": id}; 409 with deficient places when disabled
    POST /api/undo       drop the last fired transition
    POST /api/reset      back to the initial marking
    GET  /api/analysis   full analysis report
    GET  /api/dot        ?kind=net|reach, Graphviz text
    GET  /...            static web UI assets

Mutating requests are serialized behind one lock; the analysis report is
cached per loaded net.
"""

from __future__ import annotations

import json
import mimetypes
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from importlib import resources
from pathlib import Path

from .errors import (
    NotEnabledError,
    PetrikitError,
    StateLimitExceededError,
    UnknownTransitionError,
)
from .formats import analyze, graph_to_dot, net_to_dot, parse_dsl, parse_pnml, report_to_dict
from .net import PetriNet
from .session import Session
from .statespace import DEFAULT_MAX_STATES, reachability_graph


def parse_net_text(text: str):
    """Sniff DSL vs PNML and parse; returns a NetDocument."""
    if text.lstrip().startswith("<"):
        return parse_pnml(text)
    return parse_dsl(text)


class PetrikitServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address, net: PetriNet | None = None, static_dir=None,
                 max_states: int = DEFAULT_MAX_STATES):
        super().__init__(address, _Handler)
        self.lock = threading.RLock()
        self.session: Session | None = Session(net) if net is not None else None
        self.max_states = max_states
        self.static_dir = Path(static_dir) if static_dir else None
        self._analysis_cache: dict | None = None

    def load(self, net: PetriNet) -> None:
        with self.lock:
            self.session = Session(net)
            self._analysis_cache = None

    def analysis(self) -> dict:
        with self.lock:
            if self._analysis_cache is None:
                report = analyze(self.session.net, self.max_states)
                self._analysis_cache = report_to_dict(report)
            return self._analysis_cache


class _Handler(BaseHTTPRequestHandler):
    server: PetrikitServer

    def log_message(self, *args):  # keep test output quiet
        pass

    # -- helpers ---------------------------------------------------------

    def _send(self, code: int, body: bytes, content_type: str) -> None:
        self.send_response(code)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _json(self, code: int, obj) -> None:
        self._send(code, json.dumps(obj).encode("utf-8"), "application/json")

    def _body(self) -> bytes:
        length = int(self.headers.get("Content-Length") or 0)
        return self.rfile.read(length)

    def _session(self) -> Session:
        session = self.server.session
        if session is None:
            raise _NoNet()
        return session

    def _state_dict(self) -> dict:
        session = self._session()
        return {
            "net": session.net.name,
            "places": list(session.net.places),
            "marking": session.net.marking_dict(session.marking),
            "history": list(session.history),
            "enabled": list(session.enabled()),
            "deadlocked": session.deadlocked(),
        }

    # -- routes ----------------------------------------------------------

    def do_GET(self):
        path, _, query = self.path.partition("?")
        try:
            if path == "/api/state":
                with self.server.lock:
                    self._json(200, self._state_dict())
            elif path == "/api/analysis":
                self._session()
                self._json(200, self.server.analysis())
            elif path == "/api/dot":
                self._dot(query)
            elif path.startswith("/api/"):
                self._json(404, {"error": f"unknown endpoint {path}"})
            else:
                self._static(path)
        except _NoNet:
            self._json(400, {"error": "no net loaded; POST /api/net first"})

    def do_POST(self):
        path = self.path.partition("?")[0]
        try:
            if path == "/api/net":
                self._load_net()
            elif path == "/api/fire":
                self._fire()
            elif path == "/api/undo":
                with self.server.lock:
                    self._session().undo()
                    self._json(200, self._state_dict())
            elif path == "/api/reset":
                with self.server.lock:
                    self._session().reset()
                    self._json(200, self._state_dict())
            else:
                self._json(404, {"error": f"unknown endpoint {path}"})
        except _NoNet:
            self._json(400, {"error": "no net loaded; POST /api/net first"})

    def _load_net(self):
        text = self._body().decode("utf-8", errors="replace")
        try:
            net = parse_net_text(text).build()
        except PetrikitError as err:
            diag = {"error": str(err)}
            for attr in ("line", "column"):
                if getattr(err, attr, None) is not None:
                    diag[attr] = getattr(err, attr)
            self._json(400, diag)
            return
        self.server.load(net)
        with self.server.lock:
            self._json(200, self._state_dict())

    def _fire(self):
        try:
            payload = json.loads(self._body() or b"{}")
        except json.JSONDecodeError:
            self._json(400, {"error": "body must be JSON"})
            return
        transition = payload.get("transition")
        if not isinstance(transition, str):
            self._json(400, {"error": 'body must be {"transition": "<id>"}'})
            return
        with self.server.lock:
            session = self._session()
            try:
                session.fire(transition)
            except UnknownTransitionError as err:
                self._json(400, {"error": str(err)})
                return
            except NotEnabledError as err:
                self._json(
                    409,
                    {
                        "error": str(err),
                        "transition": transition,
                        "deficient": list(err.deficient),
                    },
                )
                return
            self._json(200, self._state_dict())

    def _dot(self, query: str):
        params = dict(p.split("=", 1) for p in query.split("&") if "=" in p)
        kind = params.get("kind", "net")
        session = self._session()
        with self.server.lock:
            if kind == "net":
                text = net_to_dot(session.net)
            elif kind == "reach":
                try:
                    graph = reachability_graph(session.net, self.server.max_states)
                except StateLimitExceededError as err:
                    self._json(400, {"error": str(err)})
                    return
                text = graph_to_dot(graph, session.net)
            else:
                self._json(400, {"error": f"unknown dot kind {kind!r}"})
                return
        self._send(200, text.encode("utf-8"), "text/vnd.graphviz")

    def _static(self, path: str):
        name = path.lstrip("/") or "index.html"
        if self.server.static_dir is not None:
            root = self.server.static_dir.resolve()
            target = (root / name).resolve()
            if root in target.parents or target == root:
                if target.is_file():
                    ctype = mimetypes.guess_type(target.name)[0] or "application/octet-stream"
                    self._send(200, target.read_bytes(), ctype)
                    return
            self._send(404, b"not found", "text/plain")
            return
        # Fall back to the assets packaged with petrikit.
        asset = resources.files("petrikit") / "static" / name
        if "/" not in name and asset.is_file():
            ctype = mimetypes.guess_type(name)[0] or "application/octet-stream"
            self._send(200, asset.read_bytes(), ctype)
            return
        self._send(404, b"not found", "text/plain")


class _NoNet(Exception):
    pass


def serve(host: str = "127.0.0.1", port: int = 8345, net: PetriNet | None = None,
          static_dir=None, max_states: int = DEFAULT_MAX_STATES) -> None:
    """Run the HTTP server until interrupted."""
    server = PetrikitServer((host, port), net=net, static_dir=static_dir, max_states=max_states)
    host_shown = host or "0.0.0.0"
    print(f"petrikit serving on http://{host_shown}:{server.server_address[1]}/")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
