import json
import math

import pytest

import diskpoly


def test_point_values():
    assert diskpoly.zernike_eval(1, 0, 0.0, 1.0, 0.0) == pytest.approx(1.0)
    value = diskpoly.zernike_eval(1, 1, 0.0, 0.0, 0.0)
    assert value.real == pytest.approx(-1.0)
    assert value.imag == pytest.approx(0.0)


def test_exact_terms_and_norms():
    assert diskpoly.zernike_terms(1, 1, "0") == [(0, 0, "-1", "0"), (1, 1, "2", "0")]
    assert diskpoly.zernike_norm("0", 1, 1) == "1/3"
    assert diskpoly.zernike_norm("1/2", 0, 0) == "1"
    assert diskpoly.zernike_real_norm("0", 1, 0) == "1/4"
    doc = json.loads(diskpoly.zernike_json(2, 0, "0"))
    assert doc == {"mode": "rational", "terms": [{"a": 2, "b": 0, "re": "1"}]}


def test_jacobi_and_quadrature():
    assert diskpoly.jacobi_eval(0.0, 0.0, 2, 0.0) == pytest.approx(-0.5)
    nodes, weights = diskpoly.gauss_jacobi(0.0, 0.0, 2)
    assert nodes == pytest.approx([-1 / math.sqrt(3), 1 / math.sqrt(3)])
    assert weights == pytest.approx([1.0, 1.0])

    rule = diskpoly.disk_rule(0.0, 1, 1)
    assert len(rule) == 1
    assert rule[0][2] == pytest.approx(math.pi)


def test_fit_round_trip():
    rule = diskpoly.disk_rule(0.0, 4, 13)
    xs = [node[0] for node in rule]
    ys = [node[1] for node in rule]
    values = [diskpoly.zernike_eval(1, 1, 0.0, x, y) for x, y in zip(xs, ys)]
    fit = diskpoly.fit(xs, ys, values, degree=2, mu=0.0, method="projection")
    coefficients = {(k, j): c for k, j, c in fit["coefficients"]}
    assert abs(coefficients[(1, 1)] - 1.0) < 1e-10
    assert all(abs(c) < 1e-10 for key, c in coefficients.items() if key != (1, 1))
    assert fit["residual_rms"] < 1e-10


def test_cli_verify_in_process():
    code, out, err = diskpoly.run(
        ["verify", "--family", "Z5", "--kmax", "3", "--jmax", "3", "--mu", "1/2"]
    )
    assert code == 0, err
    assert "0 failed" in out


def test_error_paths():
    with pytest.raises(ValueError):
        diskpoly.zernike_norm("not-a-number", 1, 1)
    code, _out, _err = diskpoly.run(["eval", "--k", "1", "--j", "1", "--mu", "-1", "--at", "0,0"])
    assert code == 3
