"""Smoke test for the dchase extension: python python/smoke_test.py"""

import json
from fractions import Fraction
from pathlib import Path

import dchase

EXAMPLES = Path(__file__).resolve().parent.parent / "docs" / "examples"


def load(name):
    return (EXAMPLES / name).read_text()


def main():
    m = dchase.Matrix([[1, Fraction(1, 2)], ["2/3", 0]], field="Q")
    assert m.tolist() == [[1, Fraction(1, 2)], [Fraction(2, 3), 0]]
    assert (m @ m.inverse()) == dchase.Matrix.identity(2, field="Q")
    assert m.solve([1, 0]) is not None

    a = dchase.Matrix([[1, 1, 0], [0, 1, 1]], field=2)
    assert a.rank() == 2
    assert a.kernel().dim == 1 and [1, 1, 1] in a.kernel()
    u = dchase.Subspace(3, [[1, 0, 0]])
    w = dchase.Subspace(3, [[0, 1, 0]])
    assert (u + w).dim == 2 and (u & w).dim == 0 and u.issubspace(u + w)

    f = dchase.Matrix([[1, 0]], field=2)
    g = dchase.Matrix([[1], [1]], field=2)
    r = dchase.Relation.graph(g).compose(dchase.Relation.graph(f))
    assert r.to_matrix() == g @ f
    assert dchase.Relation.graph(f).inverse().member([1, 0], [1])

    assert dchase.homology_dims([g, dchase.Matrix([[1, 1]], field=2)]) == [0, 0, 0]

    grid = dchase.Grid.from_json(load("grid_kernel.json"))
    assert grid.is_valid()
    top, left, admissible = grid.kcl_homology_dims()
    for n in admissible:
        assert top[n - 1] == left[n - 1]
        iso = grid.kcl_iso(n)
        assert iso.rows == iso.cols == top[n - 1] and iso.rank() == iso.rows
    right, bottom, admissible = grid.dualize().ccl_homology_dims()
    assert all(right[n - 1] == bottom[n - 1] for n in admissible)
    assert dchase.Grid.from_json(grid.to_json()) == grid

    bad = dchase.Grid.from_json(json.loads(load("grid_perturbed.json")))
    assert bad.validate()["inexact_columns"] == [(2, 2)]
    try:
        bad.kcl_homology_dims()
    except dchase.HypothesisError:
        pass
    else:
        raise AssertionError("an inexact grid was accepted")

    s = dchase.snake(load("snake_worked.json"), via_grids=True)
    assert s["delta"].tolist() == [[1]] and s["six_term_dims"] == [0, 0, 1, 1, 0, 0]
    assert s["holds"]

    c = dchase.cross(load("cross.json"))
    assert c["image_transfer"] and c["kernel_domain"] and c["kernel_range"]

    h = dchase.hom(load("hom_aseq.json"), load("hom_eseq.json"))
    assert h["grid_valid"] and h["right"] == h["bottom"] and h["defect"] == 3

    assert dchase.generate("snake", 7, field=5) == dchase.generate("snake", 7, field=5)
    rand = dchase.Grid.random(4, field="Q", shape=[3, 3, 2])
    assert rand.corollary()[2]

    report = dchase.selftest(seeds=10)
    assert report["passed"], report
    print("smoke test passed")


if __name__ == "__main__":
    main()
