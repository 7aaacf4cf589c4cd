"""Read-only HTTP view of a gallery output directory.

Endpoints:
  GET /current           JSON list of the active wall (from current.json)
  GET /poster/{id}.svg   poster document for an active item
  GET /audio/{id}.mid    music for an active item

The server never writes; the generation loop owns the directory.
"""
from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path


class Gallery:
    """Lookup layer between the HTTP handlers and the files on disk."""

    def __init__(self, directory: str | Path):
        self.directory = Path(directory)

    def current(self) -> dict:
        path = self.directory / "current.json"
        if not path.is_file():
            return {"count": 0, "items": []}
        return json.loads(path.read_text(encoding="utf-8"))

    def _entry(self, item_id: str) -> dict | None:
        for item in self.current().get("items", []):
            if item.get("id") == item_id:
                return item
        return None

    def poster_path(self, item_id: str) -> Path | None:
        entry = self._entry(item_id)
        if entry is None:
            return None
        path = self.directory / entry.get("poster", "")
        return path if path.is_file() else None

    def audio_path(self, item_id: str) -> Path | None:
        entry = self._entry(item_id)
        if entry is None:
            return None
        path = self.directory / entry.get("audio", "")
        return path if path.is_file() else None


class GalleryHandler(BaseHTTPRequestHandler):
    gallery: Gallery  # set by make_server

    def do_GET(self):  # noqa: N802 (http.server API)
        if self.path == "/current":
            body = json.dumps(self.gallery.current(), indent=2).encode("utf-8")
            self._reply(200, "application/json", body)
            return
        if self.path.startswith("/poster/") and self.path.endswith(".svg"):
            item_id = self.path[len("/poster/"):-len(".svg")]
            path = self.gallery.poster_path(item_id)
            if path is not None:
                self._reply(200, "image/svg+xml", path.read_bytes())
            else:
                self._not_found()
            return
        if self.path.startswith("/audio/") and self.path.endswith(".mid"):
            item_id = self.path[len("/audio/"):-len(".mid")]
            path = self.gallery.audio_path(item_id)
            if path is not None:
                self._reply(200, "audio/midi", path.read_bytes())
            else:
                self._not_found()
            return
        self._not_found()

    def _reply(self, status: int, content_type: str, body: bytes):
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(body)))
        self.end_headers()
        self.wfile.write(body)

    def _not_found(self):
        body = b'{"error": "not found"}'
        self._reply(404, "application/json", body)

    def log_message(self, format, *args):  # quiet by default
        pass


def make_server(addr: str, directory: str | Path) -> ThreadingHTTPServer:
    """Bind a gallery server to ``host:port`` without starting it."""
    host, _, port_s = addr.rpartition(":")
    if not host or not port_s.isdigit():
        raise ValueError(f"addr must look like host:port, got {addr!r}")
    handler = type("BoundGalleryHandler", (GalleryHandler,),
                   {"gallery": Gallery(directory)})
    return ThreadingHTTPServer((host, int(port_s)), handler)


def serve_forever(addr: str, directory: str | Path) -> None:
    server = make_server(addr, directory)
    try:
        server.serve_forever()
    finally:
        server.server_close()
