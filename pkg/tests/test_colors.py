import math

import pytest
from hypothesis import given, strategies as st

from affiche.colors import (
    BLACK,
    WHITE,
    contrast_ratio,
    parse_hex,
    relative_luminance,
    to_hex,
)

# frozen expected values computed from the WCAG formulas by hand
RED_LUM = 0.11288073448279418
RED_VS_WHITE = 6.44643458499947
RED_VS_BLACK = 3.2576146896558833
SQRT_21 = 4.58257569495584


def test_black_and_white_luminance():
    assert relative_luminance(BLACK) == 0.0
    assert relative_luminance(WHITE) == pytest.approx(1.0, abs=1e-12)


def test_extreme_contrast_is_21():
    assert contrast_ratio(BLACK, WHITE) == pytest.approx(21.0, abs=1e-9)
    assert contrast_ratio(WHITE, BLACK) == pytest.approx(21.0, abs=1e-9)


def test_known_colour_luminance_and_contrast():
    assert relative_luminance("#b22a2a") == pytest.approx(RED_LUM, abs=1e-12)
    assert contrast_ratio("#b22a2a", WHITE) == pytest.approx(RED_VS_WHITE,
                                                             abs=1e-9)
    assert contrast_ratio("#b22a2a", BLACK) == pytest.approx(RED_VS_BLACK,
                                                             abs=1e-9)


def test_contrast_of_equal_colours_is_1():
    assert contrast_ratio("#123456", "#123456") == pytest.approx(1.0)


def test_parse_hex_forms():
    assert parse_hex("#ffffff") == (255, 255, 255)
    assert parse_hex("#B22A2A") == (178, 42, 42)
    with pytest.raises(ValueError):
        parse_hex("ffffff")
    with pytest.raises(ValueError):
        parse_hex("#12345")
    with pytest.raises(ValueError):
        parse_hex("#zzzzzz")


def test_to_hex_round_trip():
    assert to_hex((178, 42, 42)) == "#b22a2a"
    assert parse_hex(to_hex((0, 128, 255))) == (0, 128, 255)


@given(st.tuples(st.integers(0, 255), st.integers(0, 255),
                 st.integers(0, 255)))
def test_every_colour_contrasts_with_black_or_white(rgb):
    # product of the two ratios is exactly 21, so the max is at least sqrt(21)
    colour = to_hex(rgb)
    vs_black = contrast_ratio(colour, BLACK)
    vs_white = contrast_ratio(colour, WHITE)
    assert vs_black * vs_white == pytest.approx(21.0, rel=1e-9)
    assert max(vs_black, vs_white) >= SQRT_21 - 1e-9


@given(st.tuples(st.integers(0, 255), st.integers(0, 255),
                 st.integers(0, 255)),
       st.tuples(st.integers(0, 255), st.integers(0, 255),
                 st.integers(0, 255)))
def test_contrast_symmetric_and_bounded(a, b):
    ca, cb = to_hex(a), to_hex(b)
    r = contrast_ratio(ca, cb)
    assert r == contrast_ratio(cb, ca)
    assert 1.0 - 1e-12 <= r <= 21.0 + 1e-12
