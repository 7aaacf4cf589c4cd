import json
import threading
import urllib.request

import pytest

from affiche.server import Gallery, make_server


@pytest.fixture
def gallery_dir(tmp_path):
    manifest = {
        "count": 1,
        "items": [{"id": "t1", "text": "hello", "predominant": ["joy"],
                   "poster": "t1_5.svg", "audio": "t1_5.mid"}],
    }
    (tmp_path / "current.json").write_text(json.dumps(manifest),
                                           encoding="utf-8")
    (tmp_path / "t1_5.svg").write_bytes(b"<svg/>")
    (tmp_path / "t1_5.mid").write_bytes(b"MThd")
    return tmp_path


def test_gallery_empty_when_no_manifest(tmp_path):
    g = Gallery(tmp_path)
    assert g.current() == {"count": 0, "items": []}
    assert g.poster_path("t1") is None
    assert g.audio_path("t1") is None


def test_gallery_lookups(gallery_dir):
    g = Gallery(gallery_dir)
    assert g.current()["count"] == 1
    assert g.poster_path("t1") == gallery_dir / "t1_5.svg"
    assert g.audio_path("t1") == gallery_dir / "t1_5.mid"
    assert g.poster_path("missing") is None


def test_gallery_missing_file_behind_manifest(gallery_dir):
    (gallery_dir / "t1_5.svg").unlink()
    g = Gallery(gallery_dir)
    assert g.poster_path("t1") is None
    assert g.audio_path("t1") is not None


def test_make_server_rejects_bad_addr(tmp_path):
    with pytest.raises(ValueError):
        make_server("localhost", tmp_path)
    with pytest.raises(ValueError):
        make_server("localhost:", tmp_path)
    with pytest.raises(ValueError):
        make_server(":8000", tmp_path)


@pytest.fixture
def live_server(gallery_dir):
    server = make_server("127.0.0.1:0", gallery_dir)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    host, port = server.server_address[:2]
    yield f"http://{host}:{port}"
    server.shutdown()
    server.server_close()


def fetch(url):
    try:
        with urllib.request.urlopen(url) as resp:
            return resp.status, resp.headers["Content-Type"], resp.read()
    except urllib.error.HTTPError as err:
        return err.code, err.headers["Content-Type"], err.read()


def test_current_endpoint(live_server):
    status, ctype, body = fetch(f"{live_server}/current")
    assert status == 200
    assert ctype == "application/json"
    payload = json.loads(body)
    assert payload["count"] == 1
    assert payload["items"][0]["id"] == "t1"


def test_poster_endpoint(live_server):
    status, ctype, body = fetch(f"{live_server}/poster/t1.svg")
    assert (status, ctype, body) == (200, "image/svg+xml", b"<svg/>")


def test_audio_endpoint(live_server):
    status, ctype, body = fetch(f"{live_server}/audio/t1.mid")
    assert (status, ctype, body) == (200, "audio/midi", b"MThd")


def test_unknown_routes_are_404(live_server):
    for path in ("/", "/poster/zzz.svg", "/audio/zzz.mid", "/poster/t1.png",
                 "/anything"):
        status, ctype, body = fetch(f"{live_server}{path}")
        assert status == 404
        assert ctype == "application/json"
        assert json.loads(body) == {"error": "not found"}


def test_path_traversal_is_not_served(live_server, gallery_dir):
    # ids resolve only through manifest entries, so an unlisted id (even a
    # crafted one) gets a 404 rather than a file read
    status, _, _ = fetch(f"{live_server}/poster/..%2Fcurrent.json.svg")
    assert status == 404
