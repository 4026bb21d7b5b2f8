import superlie


def test_builtins_listed():
    names = superlie.builtin_algebras()
    assert "osp12" in names and "sl12" in names


def test_verify_passes_and_fails():
    good = superlie.verify("osp12")
    assert good["passed"]
    assert all(c["status"] == "pass" for c in good["cross"]["checks"])
    bad = superlie.verify("osp12-corrupted")
    assert not bad["passed"]
    jacobi = [c for c in bad["report"]["checks"] if c["name"] == "superalgebra.jacobi"]
    assert jacobi and jacobi[0]["status"] == "fail"


def test_decompose():
    assert superlie.decompose("V2plusV0")["lambdas"] == [2, 0]
    assert superlie.decompose("scrambled:4,2,2:5")["lambdas"] == [4, 2, 2]
    assert superlie.h_spectrum("builtin:V4") == [4, 2, 0, -2, -4]


def test_documents_round_trip_through_python():
    doc = superlie.algebra_document("sl12")
    assert doc["format"] == "superlie-algebra/1"
    assert len(doc["basis"]) == 8
    assert superlie.normalize_scalar("2/4") == "1/2"


def test_affinize_window():
    r = superlie.affinize("osp12", rank=1, q=[[-1]], window=2, samples=100, seed=3)
    assert r["passed"]
    assert len(r["roots"]) == 5 * 5


def test_twist_labels():
    c = superlie.twist(1, 1, window=2, samples=50)
    assert c["type"] == "C(1,1)" and c["passed"]
    bc = superlie.twist(1, 1, zero=True, window=2, samples=50)
    assert bc["type"] == "BC(1,1)" and bc["passed"]


def test_errors_are_raised():
    import pytest

    with pytest.raises(superlie.SuperlieError):
        superlie.verify("builtin:nope")
    with pytest.raises(superlie.SuperlieError):
        superlie.twist(1, 1, kind="sl")
