"""Smoke test for the bcpbook Python extension.

Build and install it first, e.g. `pip install --no-build-isolation ./crates/py`
or `maturin develop -m crates/py/Cargo.toml`.
"""

import json

import bcpbook


def main():
    cube = bcpbook.gen_cube()
    assert cube.n == 8 and len(cube.edges) == 12
    assert cube.is_cubic() and cube.is_bipartite() and cube.is_planar()
    assert bcpbook.Graph.from_graph6(cube.to_graph6()) == cube
    assert bcpbook.Graph.from_json(cube.to_json()) == cube
    assert cube.check()["bcp"] is True

    be = bcpbook.embed(cube)
    assert be.page_count() == 3
    assert bcpbook.verify(cube, be) == []
    assert all(bcpbook.verify(cube, be.rotated(s)) == [] for s in range(8))
    assert bcpbook.verify(cube, be.reversed()) == []
    assert set(be.pages.values()) == {0, 1, 2}
    assert bcpbook.BookEmbedding.from_json(be.to_json()).spine == be.spine
    assert be.render_svg().startswith("<svg")

    broken = bcpbook.BookEmbedding(be.spine, [(e, 0) for e in cube.edges])
    kinds = {v["kind"] for v in bcpbook.verify(cube, broken)}
    assert "matching-degree" in kinds, kinds

    assert bcpbook.mbt(cube) == 3
    assert bcpbook.mbt(cube, page_bound=2) is None
    assert bcpbook.mbt(bcpbook.gen_ladder(2)) == 2

    colors = bcpbook.color(cube)
    assert len(colors["faces"]) == 6 and len(colors["edges"]) == 12

    chain = bcpbook.gen_chain([8, 8, 8], [2, 1])
    assert chain.n == 54 and chain.vertex_connectivity() == 2
    tree = bcpbook.decompose(chain)
    assert tree["type"] == "join" and tree["order"] == 54
    assert bcpbook.verify(chain, bcpbook.embed(chain)) == []

    graphs = bcpbook.corpus()
    assert len(graphs) >= 30
    for name, g in graphs:
        assert bcpbook.embed(g).page_count() == 3, name

    try:
        bcpbook.gen_prism(5)
    except ValueError as e:
        assert "even" in str(e)
    else:
        raise AssertionError("odd prism accepted")

    try:
        bcpbook.embed(bcpbook.Graph.from_graph6("C~"))
    except ValueError as e:
        assert "bipartite" in str(e)
    else:
        raise AssertionError("K4 embedded")

    print(json.dumps({"ok": True, "corpus": len(graphs)}))


if __name__ == "__main__":
    main()
