"""Condition deciders: frozen fixture verdicts, certificates, config handling."""

import json

import pytest

from finring.classify import (CONDITION_ORDER, ClassifyConfig, SEARCH_CAP_ENV,
                              classify, decide_pseudo_arithmetical,
                              gaussian_ring_verdict)
from finring.errors import BoundExceededError
from finring.ideals import is_local, residue_vector_space
from finring.reports import to_json
from finring.rings import (ProductRing, ZmodRing, free_module,
                           make_trivial_extension, standard_gf)


def _residue_idealization(order: int, dim: int = 1):
    base = ZmodRing(order)
    module = residue_vector_space(base, is_local(base), dim)
    return make_trivial_extension(base, module)[0]


def _field_idealization(p: int, k: int, dim: int):
    base = standard_gf(p, k)
    return make_trivial_extension(base, free_module(base, dim))[0]


def _verdicts(report):
    return {name: report.verdict(name) for name in CONDITION_ORDER}


# ---------------------------------------------------------------- fixtures


def test_zmod4_frozen():
    report = classify(ZmodRing(4))
    assert _verdicts(report) == {
        "reduced": False,
        "semihereditary": False,
        "weak_dim_class": "Infinite",
        "arithmetical": True,
        "gaussian": "Yes",
        "pruefer": True,
        "total_quotient_ring": True,
        "pseudo_arithmetical": "Yes",
        "zero_ideal_locally_irreducible": True,
    }
    conditions = report.to_dict()["conditions"]
    assert conditions["reduced"]["witness"] == {"element": 2}
    assert conditions["gaussian"]["certificate"] == {"rule": "arithmetical"}


def test_residue_idealization_of_z4_frozen():
    report = classify(_residue_idealization(4))
    v = _verdicts(report)
    assert v["total_quotient_ring"] is True
    assert v["pruefer"] is True
    assert v["gaussian"] == "Yes"
    assert v["arithmetical"] is False
    assert v["weak_dim_class"] == "Infinite"
    assert v["pseudo_arithmetical"] == "No"
    assert v["zero_ideal_locally_irreducible"] is False

    conditions = json.loads(to_json(report.to_dict()))["conditions"]
    assert conditions["gaussian"]["certificate"]["rule"] == "local_square_zero_maximal"
    pseudo = conditions["pseudo_arithmetical"]
    assert pseudo["witness"]["f"] == [[2, 0], [0, 1]]
    assert pseudo["witness"]["content_order"] == 4
    assert pseudo["witness"]["gaussian_reason"]["rule"] == "ring_certified_gaussian"
    assert conditions["arithmetical"]["witness"] is not None


def test_field_idealization_frozen():
    report = classify(_field_idealization(2, 1, 2))
    v = _verdicts(report)
    assert v["gaussian"] == "Yes"
    assert v["arithmetical"] is False
    assert v["pseudo_arithmetical"] == "No"
    assert v["zero_ideal_locally_irreducible"] is False
    pseudo = json.loads(to_json(report.to_dict()))["conditions"]["pseudo_arithmetical"]
    assert pseudo["witness"]["f"] == [[0, [1, 0]], [0, [0, 1]]]


def test_dim_one_field_idealization_arithmetical():
    report = classify(_field_idealization(2, 1, 1))
    assert report.verdict("arithmetical") is True


def test_self_idealization_bounded_rows():
    base = ZmodRing(4)
    ring = make_trivial_extension(base, free_module(base, 1))[0]
    report = classify(ring)
    v = _verdicts(report)
    assert v["gaussian"] == "No"
    assert v["arithmetical"] is False
    assert v["pseudo_arithmetical"] == "BoundedYes"
    conditions = report.to_dict()["conditions"]
    assert conditions["gaussian"]["witness"]["f"] is not None
    assert conditions["pseudo_arithmetical"]["bound"] is not None


def test_product_decomposition_rule():
    # Gaussian but not arithmetical, so the lattice rule cannot fire and the
    # verdict must come from the verified local-factor decomposition.
    ring = ProductRing(_residue_idealization(4), standard_gf(2, 2))
    verdict = gaussian_ring_verdict(ring, ClassifyConfig())
    assert verdict.status == "Yes"
    assert verdict.certificate["rule"] == "local_factor_decomposition"
    assert verdict.certificate["isomorphism_checked"] is True
    factors = verdict.certificate["factors"]
    assert sorted(f["localization_order"] for f in factors) == [4, 8]
    assert all(f["status"] == "Yes" for f in factors)


# ---------------------------------------------------------------- chain + structure


def test_implication_chain_enforced_on_sample():
    for ring in (ZmodRing(30), standard_gf(3, 2), _residue_idealization(8)):
        report = classify(ring)
        v = _verdicts(report)
        if v["semihereditary"]:
            assert v["weak_dim_class"] == "Zero"
        if v["weak_dim_class"] == "Zero":
            assert v["arithmetical"]
        if v["arithmetical"]:
            assert v["gaussian"] == "Yes"
        if v["gaussian"] == "Yes":
            assert v["pruefer"]
        assert (v["weak_dim_class"] == "Zero") == (v["arithmetical"] and v["reduced"])
        assert v["weak_dim_class"] in ("Zero", "Infinite")


def test_condition_key_order_pinned():
    payload = classify(ZmodRing(6)).to_dict()
    assert list(payload["conditions"]) == list(CONDITION_ORDER)
    assert CONDITION_ORDER == (
        "reduced", "semihereditary", "weak_dim_class", "arithmetical",
        "gaussian", "pruefer", "total_quotient_ring", "pseudo_arithmetical",
        "zero_ideal_locally_irreducible")


def test_report_json_deterministic():
    config = ClassifyConfig(seed=3)
    a = to_json(classify(ZmodRing(12), config).to_dict())
    b = to_json(classify(ZmodRing(12), config).to_dict())
    assert a == b
    json.loads(a)  # parses cleanly


def test_millis_only_with_timing():
    base = classify(ZmodRing(4), ClassifyConfig()).to_dict()
    timed = classify(ZmodRing(4), ClassifyConfig(timing=True)).to_dict()
    assert all("millis" not in c for c in base["conditions"].values())
    assert all("millis" in c for c in timed["conditions"].values())


# ---------------------------------------------------------------- config


def test_config_from_env(monkeypatch):
    monkeypatch.setenv(SEARCH_CAP_ENV, "12345")
    config = ClassifyConfig.from_env()
    assert config.witness_cap == 12345
    assert config.pair_cap == 12345
    # explicit overrides beat the environment
    config = ClassifyConfig.from_env(witness_cap=77)
    assert config.witness_cap == 77
    assert config.pair_cap == 12345


def test_config_from_env_malformed(monkeypatch):
    monkeypatch.setenv(SEARCH_CAP_ENV, "not-a-number")
    with pytest.raises(BoundExceededError):
        ClassifyConfig.from_env()


def test_config_key_distinguishes_search_parameters():
    assert ClassifyConfig().key() != ClassifyConfig(degree_bound=2).key()
    assert ClassifyConfig().key() == ClassifyConfig().key()


def test_bound_exceeded_when_lattice_capped():
    with pytest.raises(BoundExceededError):
        classify(ZmodRing(8), ClassifyConfig(lattice_limit=1))


def test_pseudo_arithmetical_direct_call():
    ring = _residue_idealization(4)
    for config in (ClassifyConfig(), ClassifyConfig(degree_bound=2)):
        gaussian = gaussian_ring_verdict(ring, config)
        result = decide_pseudo_arithmetical(ring, config, gaussian)
        assert result.verdict == "No"
