import pytest
from hypothesis import given, strategies as st

import oracles
import zoo
from starline import (
    EdgeColoring,
    FormatError,
    Violation,
    build,
    emit_coloring,
    enumerate_graphs,
    find_violation,
    is_star_coloring,
    is_star_critical,
    is_star_k_colorable,
    parse_coloring,
    star_chromatic_index,
)
from strategies import subcubic_multigraphs


def coloring(k, colors_in_edge_order):
    return EdgeColoring(k, dict(enumerate(colors_in_edge_order)))


def chain_vertices(g, edge_ids):
    """Vertex sequence along consecutive edges, for witness validation."""
    first, second = edge_ids[0], edge_ids[1]
    shared = set(g.endpoints(first)) & set(g.endpoints(second))
    start = next(v for v in g.endpoints(first) if v not in shared)
    verts = [start]
    for eid in edge_ids:
        verts.append(g.other_end(eid, verts[-1]))
    return verts


def assert_genuine(g, col, vio):
    assert isinstance(vio, Violation)
    ids = vio.edge_ids
    assert len(set(ids)) == len(ids)
    palette = {col.color(e) for e in ids}
    if vio.kind == "improper":
        e1, e2 = ids
        assert set(g.endpoints(e1)) & set(g.endpoints(e2))
        assert col.color(e1) == col.color(e2)
        return
    assert len(ids) == 4
    assert len(palette) == 2
    verts = chain_vertices(g, ids)
    if vio.kind == "bicolored-path":
        assert len(set(verts)) == 5
    elif vio.kind == "bicolored-cycle":
        assert verts[0] == verts[-1]
        assert len(set(verts[:4])) == 4
    else:
        raise AssertionError(f"unknown kind {vio.kind}")


# ----------------------------------------------------------------------
# coloring values and formats
# ----------------------------------------------------------------------

def test_edge_coloring_validation():
    c = EdgeColoring(3, {0: 1, 1: 3})
    assert c.color(0) == 1
    assert c.color(7) is None
    assert not c.is_total(3)
    assert c.is_total(2)
    with pytest.raises(ValueError):
        EdgeColoring(2, {0: 3})
    with pytest.raises(ValueError):
        EdgeColoring(2, {0: 0})
    with pytest.raises(ValueError):
        EdgeColoring(-1)
    with pytest.raises(ValueError):
        EdgeColoring(2, {-1: 1})


def test_edge_coloring_immutable():
    c = EdgeColoring(2, {0: 1})
    with pytest.raises(AttributeError):
        c.k = 5
    with pytest.raises(TypeError):
        c.assignment[0] = 2


def test_coloring_roundtrip():
    c = EdgeColoring(4, {0: 1, 2: 4, 1: 2})
    assert parse_coloring(emit_coloring(c)) == c
    parsed = parse_coloring("# cert\n0 2\n\n1 1 # note\n")
    assert parsed.k == 2
    assert dict(parsed.assignment) == {0: 2, 1: 1}


@pytest.mark.parametrize("text", ["0 1 2\n", "0 x\n", "0 1\n0 2\n", "0 0\n"])
def test_parse_coloring_rejects(text):
    with pytest.raises(FormatError):
        parse_coloring(text)


# ----------------------------------------------------------------------
# violation finding
# ----------------------------------------------------------------------

def test_bicolored_path_found():
    vio = find_violation(zoo.path(5), coloring(2, [1, 2, 1, 2]))
    assert vio.kind == "bicolored-path"
    assert sorted(vio.edge_ids) == [0, 1, 2, 3]


def test_bicolored_cycle_found():
    vio = find_violation(zoo.cycle(4), coloring(2, [1, 2, 1, 2]))
    assert vio.kind == "bicolored-cycle"
    assert sorted(vio.edge_ids) == [0, 1, 2, 3]


def test_three_colored_cycle_accepted():
    assert find_violation(zoo.cycle(4), coloring(3, [1, 2, 1, 3])) is None


def test_improper_found():
    vio = find_violation(zoo.parallel(2), coloring(1, [1, 1]))
    assert vio.kind == "improper"
    assert sorted(vio.edge_ids) == [0, 1]
    vio = find_violation(zoo.path(3), coloring(2, [2, 2]))
    assert vio.kind == "improper"


def test_partial_coloring_judged_on_colored_structures_only():
    partial = EdgeColoring(2, {0: 1, 1: 2, 2: 1})
    assert find_violation(zoo.path(5), partial) is None
    assert find_violation(zoo.path(5), EdgeColoring(1, {0: 1, 2: 1})) is None


def test_is_star_coloring():
    assert is_star_coloring(zoo.path(4), coloring(2, [1, 2, 1]))
    assert is_star_coloring(zoo.path(5), coloring(3, [1, 2, 3, 1]))
    assert not is_star_coloring(zoo.path(5), coloring(2, [1, 2, 1, 2]))
    with pytest.raises(ValueError):
        is_star_coloring(zoo.path(5), EdgeColoring(2, {0: 1}))


@given(subcubic_multigraphs(max_n=7), st.data())
def test_find_violation_matches_definition_random(g, data):
    k = data.draw(st.integers(1, 4))
    colors = [data.draw(st.integers(1, k)) for _ in range(g.m)]
    col = coloring(k, colors)
    vio = find_violation(g, col)
    ok = oracles.oracle_is_star(g, dict(enumerate(colors)))
    assert (vio is None) == ok
    if vio is not None:
        assert_genuine(g, col, vio)


@given(subcubic_multigraphs(max_n=7), st.data())
def test_find_violation_matches_definition_proper(g, data):
    colors = {}
    for eid in range(g.m):
        u, v = g.endpoints(eid)
        taken = {
            colors[other]
            for w in (u, v)
            for _, other in g.adjacency[w]
            if other in colors
        }
        free = [c for c in range(1, 6) if c not in taken]
        colors[eid] = data.draw(st.sampled_from(free))
    col = EdgeColoring(5, colors)
    vio = find_violation(g, col)
    assert (vio is None) == oracles.oracle_is_star(g, colors)
    if vio is not None:
        assert_genuine(g, col, vio)
        assert vio.kind != "improper"


@given(subcubic_multigraphs(max_n=6), st.data())
def test_scoped_violations_cover_global(g, data):
    k = data.draw(st.integers(1, 3))
    col = coloring(k, [data.draw(st.integers(1, k)) for _ in range(g.m)])
    scoped = [find_violation(g, col, scope=e) for e in range(g.m)]
    assert (find_violation(g, col) is None) == all(v is None for v in scoped)
    for e, vio in enumerate(scoped):
        if vio is not None:
            assert e in vio.edge_ids
            assert_genuine(g, col, vio)


# ----------------------------------------------------------------------
# solver
# ----------------------------------------------------------------------

def test_unsolvable_cases():
    assert is_star_k_colorable(zoo.cycle(4), 2) is None
    assert is_star_k_colorable(zoo.complete_bipartite(3, 3), 5) is None
    assert is_star_k_colorable(zoo.complete(4), 4) is None
    assert is_star_k_colorable(zoo.cube(), 3) is None
    assert is_star_k_colorable(zoo.prism(), 5) is None
    assert is_star_k_colorable(zoo.theta_graph(), 5) is None


def test_certificates_verify():
    for g, k in [
        (zoo.cycle(4), 3),
        (zoo.complete_bipartite(3, 3), 6),
        (zoo.cube(), 4),
        (zoo.complete(4), 5),
        (zoo.petersen(), 5),
    ]:
        cert = is_star_k_colorable(g, k)
        assert cert is not None
        assert cert.k <= k
        assert is_star_coloring(g, cert)
        assert oracles.oracle_is_star(g, dict(cert.assignment))


def test_known_chromatic_indices():
    assert star_chromatic_index(zoo.complete_bipartite(3, 3))[0] == 6
    assert star_chromatic_index(zoo.cube())[0] == 4
    assert star_chromatic_index(zoo.cycle(4))[0] == 3
    assert star_chromatic_index(zoo.path(5))[0] == 3
    assert star_chromatic_index(zoo.complete(4))[0] == 5
    assert star_chromatic_index(zoo.prism())[0] == 6
    assert star_chromatic_index(zoo.theta_graph())[0] == 6
    assert star_chromatic_index(zoo.petersen())[0] == 5


def test_cycle_chromatic_indices():
    expected = {3: 3, 4: 3, 5: 4, 6: 3, 7: 3, 9: 3}
    for n, value in expected.items():
        chi, cert = star_chromatic_index(zoo.cycle(n))
        assert chi == value
        assert is_star_coloring(zoo.cycle(n), cert)
    assert oracles.oracle_chi(zoo.cycle(5)) == 4
    assert oracles.oracle_chi(zoo.cycle(7)) == 3


def test_edgeless_and_tiny():
    chi, cert = star_chromatic_index(build(3, []))
    assert chi == 0
    assert cert.is_total(0)
    assert star_chromatic_index(zoo.path(2))[0] == 1
    assert is_star_k_colorable(build(1, []), 0) is not None


def test_disconnected_components_solved_independently():
    k4 = list(zoo.complete(4).edges)
    c4 = [(u + 4, v + 4) for u, v in zoo.cycle(4).edges]
    g = build(8, k4 + c4)
    chi, cert = star_chromatic_index(g)
    assert chi == 5
    assert is_star_coloring(g, cert)


def test_solver_matches_oracle_on_enumerated():
    for mode, top in (("simple", 5), ("multigraph", 4)):
        for g in enumerate_graphs(top, mode):
            assert star_chromatic_index(g)[0] == oracles.oracle_chi(g)


@given(subcubic_multigraphs(max_n=6))
def test_solver_matches_oracle_random(g):
    chi, cert = star_chromatic_index(g)
    assert is_star_coloring(g, cert)
    assert chi == oracles.oracle_chi(g)


@given(subcubic_multigraphs(min_n=2, max_n=7), st.data())
def test_chi_monotone_under_deletion(g, data):
    chi = star_chromatic_index(g)[0]
    v = data.draw(st.integers(0, g.n - 1))
    assert star_chromatic_index(g.delete_vertex(v))[0] <= chi
    if g.m:
        e = data.draw(st.integers(0, g.m - 1))
        assert star_chromatic_index(g.delete_edge(e))[0] <= chi


@given(subcubic_multigraphs(max_n=7))
def test_chi_bounds(g):
    chi, _ = star_chromatic_index(g)
    if g.m:
        assert g.max_degree <= chi <= min(7, g.m)


def test_long_path_no_recursion_blowup():
    assert star_chromatic_index(zoo.path(500))[0] == 3
    assert is_star_k_colorable(zoo.path(2000), 3) is not None


# ----------------------------------------------------------------------
# criticality
# ----------------------------------------------------------------------

def test_k33_is_critical():
    report = is_star_critical(zoo.complete_bipartite(3, 3))
    assert report.critical
    assert report.k == 5
    assert not report.colorable_at_k
    assert report.deletion_chi == (5,) * 6


def test_colorable_graph_is_not_critical():
    report = is_star_critical(zoo.cycle(4))
    assert not report.critical
    assert report.colorable_at_k
    assert report.deletion_chi is None


def test_uncolorable_but_not_critical():
    report = is_star_critical(zoo.path(6), k=2)
    assert not report.critical
    assert not report.colorable_at_k
    assert max(report.deletion_chi) > 2


def test_path5_is_2_critical():
    report = is_star_critical(zoo.path(5), k=2)
    assert report.critical
    assert report.deletion_chi == (2, 2, 1, 2, 2)


def test_other_known_critical_graphs():
    assert is_star_critical(zoo.prism()).critical
    assert is_star_critical(zoo.theta_graph()).critical
