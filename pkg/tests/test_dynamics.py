"""Replacement dynamics: single steps, word iteration, periodicity tests."""

import random
from fractions import Fraction

import pytest

from repdyn.dynamics import (
    Form,
    apply_type,
    apply_type_trace,
    graph_to_dot,
    is_periodic_of_type,
    orbit_graph,
    replace_step,
)
from repdyn.typeclasses import rotate


def F(a, b=1):
    return Fraction(a, b)


def test_form_value_and_str():
    f = Form(F(1), F(-2))
    assert f.value((F(3), F(2))) == 9 - 8
    assert "x^2" in str(f) and "y^2" in str(f)


def test_replace_step_by_hand():
    f = Form(F(2), F(3))  # f(x, y) = 2x^2 + 3y^2
    v = (F(1), F(-1))
    # value is 5; the chosen coordinate is replaced, the other kept
    assert replace_step(f, v, "L") == (F(5), F(-1))
    assert replace_step(f, v, "R") == (F(1), F(5))
    with pytest.raises(ValueError):
        replace_step(f, v, "X")


def test_apply_type_runs_left_to_right():
    f = Form(F(1), F(1))  # f(x, y) = x^2 + y^2
    v = (F(1), F(1))
    # L: (2, 1); then R: (2, 5)
    assert apply_type(f, v, ("L", "R")) == (F(2), F(5))
    # opposite order: R first gives (1, 2), then L gives (5, 2)
    assert apply_type(f, v, ("R", "L")) == (F(5), F(2))
    assert apply_type(f, v, ()) == v


def test_apply_type_trace_prefixes():
    f = Form(F(1), F(1))
    v = (F(1), F(1))
    trace = apply_type_trace(f, v, ("L", "R"))
    assert trace == [(F(1), F(1)), (F(2), F(1)), (F(2), F(5))]
    assert trace[-1] == apply_type(f, v, ("L", "R"))


def test_concatenation_law_random():
    rng = random.Random(9)
    for _ in range(50):
        f = Form(F(rng.randint(-5, 5) or 1, rng.randint(1, 4)), F(rng.randint(-5, 5) or 1, rng.randint(1, 4)))
        v = (F(rng.randint(-4, 4), rng.randint(1, 3)), F(rng.randint(-4, 4), rng.randint(1, 3)))
        s = tuple(rng.choice("LR") for _ in range(rng.randint(0, 3)))
        t = tuple(rng.choice("LR") for _ in range(rng.randint(0, 3)))
        assert apply_type(f, apply_type(f, v, s), t) == apply_type(f, v, s + t)


def test_periodic_vector_of_exact_type_two():
    # f(x, y) = x^2 - y^2 fixes (1, 0) pointwise, so look elsewhere:
    # f(x, y) = x^2 + y^2 - keep it simple with a known 2-cycle instead.
    # For C = 1, D = -1: v = (0, 1): L gives (-1, 1), R gives (0, 0) - no.
    # Use the classified pair: C = 1, D = -1, v = (0, 1).
    f = Form(F(1), F(-1))
    v = (F(0), F(1))
    # f(0, 1) = -1: L-step gives (-1, 1); f(-1, 1) = 0: R-step gives (-1, 0)...
    # full check is delegated to the library's own periodicity predicate
    # on the known period-2 witness (x, y) = (0, 1) with word (L, L):
    # L: (-1, 1); L: f(-1,1) = 0 -> (0, 1). Exact period 2.
    assert apply_type(f, v, ("L", "L")) == v
    assert is_periodic_of_type(f, v, ("L", "L"))


def test_exact_type_rejects_when_a_prefix_already_fixes():
    # the x-coordinate 1 with y untouched: (1, q) is fixed by a single L
    # whenever f(1, q) = 1, e.g. C = 1, D = 2, v = (1, 0).
    f = Form(F(1), F(2))
    v = (F(1), F(0))
    assert apply_type(f, v, ("L",)) == v
    assert is_periodic_of_type(f, v, ("L",))
    # the doubled word also fixes v, but its one-letter prefix already does
    assert apply_type(f, v, ("L", "L")) == v
    assert not is_periodic_of_type(f, v, ("L", "L"))


def test_exact_type_requires_return():
    f = Form(F(1), F(1))
    assert not is_periodic_of_type(f, (F(1), F(1)), ("L", "R"))
    with pytest.raises(ValueError):
        is_periodic_of_type(f, (F(1), F(1)), ())


def test_rotation_carries_periodic_vectors_around_the_cycle():
    f = Form(F(1), F(-1))
    v = (F(0), F(1))
    word = ("L", "L")
    assert is_periodic_of_type(f, v, word)
    w = apply_type(f, v, (word[0],))
    # rotate() moves the last letter to the front; advancing the vector one
    # step moves the first letter to the back, which is the inverse rotation
    shifted = word[1:] + word[:1]
    assert rotate(shifted) == word
    assert is_periodic_of_type(f, w, shifted)


def test_orbit_graph_on_a_finite_orbit():
    f = Form(F(1), F(-1))
    g = orbit_graph(f, (F(0), F(1)), max_vertices=16)
    assert not g.truncated
    assert (F(0), F(1)) in g.vertices
    # edges are (source index, letter, target index) and match the dynamics
    out = {}
    for src, letter, dst in g.edges:
        out.setdefault(src, set()).add(letter)
        assert replace_step(f, g.vertices[src], letter) == g.vertices[dst]
    assert all(letters == {"L", "R"} for letters in out.values())
    assert set(out) == set(range(len(g.vertices)))
    assert g.vertices[g.index_of((F(0), F(1)))] == (F(0), F(1))


def test_orbit_graph_truncates_infinite_orbits():
    f = Form(F(2), F(3))
    g = orbit_graph(f, (F(2), F(5)), max_vertices=12)
    assert g.truncated
    assert len(g.vertices) == 12


def test_graph_to_dot_output():
    f = Form(F(1), F(-1))
    g = orbit_graph(f, (F(0), F(1)), max_vertices=16)
    dot = graph_to_dot(g, name="cycle")
    assert dot.startswith("digraph cycle {")
    assert dot.rstrip().endswith("}")
    assert 'label="(0, 1)"' in dot
    assert 'label="L"' in dot and 'label="R"' in dot
