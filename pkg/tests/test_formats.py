import pytest

from affiche.formats import ISO_216, MM_TO_PT, PosterFormat, poster_format


def test_a_series_dimensions():
    assert ISO_216["A0"] == (841, 1189)
    assert ISO_216["A3"] == (297, 420)
    assert ISO_216["A4"] == (210, 297)
    assert ISO_216["A5"] == (148, 210)
    assert ISO_216["B3"] == (353, 500)
    assert ISO_216["C4"] == (229, 324)


def test_series_covers_0_to_8():
    for series in "ABC":
        for i in range(9):
            assert f"{series}{i}" in ISO_216


def test_point_conversion():
    fmt = poster_format("A4")
    assert fmt.width_mm == 210
    assert fmt.height_mm == 297
    # 1 mm = 72/25.4 pt, frozen reference values
    assert fmt.width_pt == pytest.approx(595.2755905511812, abs=1e-9)
    assert fmt.height_pt == pytest.approx(841.8897637795276, abs=1e-9)
    assert MM_TO_PT == pytest.approx(72 / 25.4)


def test_portrait_aspect_is_sqrt2():
    for name, (w, h) in ISO_216.items():
        assert h > w
        assert h / w == pytest.approx(2 ** 0.5, rel=0.01), name


def test_unknown_format_raises():
    with pytest.raises(KeyError):
        poster_format("A9")


def test_format_is_frozen():
    fmt = poster_format("A3")
    with pytest.raises(AttributeError):
        fmt.width_mm = 400
    assert fmt == PosterFormat("A3", 297, 420)
