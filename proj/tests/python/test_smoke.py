import qlab


def test_expand_f1():
    coeffs = qlab.expand("f1", 5)
    assert coeffs == ["0", "1", "0", "1", "1", "0"]


def test_expand_theta_matches_lambert():
    assert qlab.expand("theta", 10) == qlab.expand("lambert", 10)
    assert qlab.expand("theta", 4) == ["1", "2", "1", "2", "2"]


def test_expand_family_requires_m():
    import pytest

    with pytest.raises(ValueError):
        qlab.expand("aprime", 10)
    coeffs = qlab.expand("a", 10, m=2)
    assert coeffs[1] == "-1"


def test_verify_single():
    report = qlab.verify("lemma-a2", 40)
    assert report["status"] == "PASS"
    assert report["order"] == 40
    assert report["first_mismatch"] is None


def test_verify_unknown_id():
    report = qlab.verify("no-such-identity")
    assert report["status"] == "ERROR"


def test_list_identities():
    records = qlab.list_identities()
    ids = {r["id"] for r in records}
    assert {"thm-f1", "thm-f2", "thm-g", "lambert-theta", "bound-f1"} <= ids
    assert all(r["anchor"] for r in records)


def test_oracles():
    assert [qlab.representation_count("f1", n) for n in range(1, 6)] == [1, 0, 1, 1, 0]
    assert qlab.f1_partition_scan(7) == qlab.representation_count("f1", 7)
    reps = qlab.enumerate_representations("g", 6)
    assert len(reps) == 3
    assert sum(r["sign"] for r in reps) == 1
