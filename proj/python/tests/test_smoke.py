import math

import pytest

import crfuzzy


@pytest.fixture(scope="module")
def model():
    return crfuzzy.default_model()


def test_default_model_shape(model):
    assert [v.name for v in model.inputs] == ["signal_dbm", "velocity_kmh", "spectrum_ratio", "distance_m"]
    assert model.output.name == "decision"
    assert len(model.rules) == 81
    assert model.grid_points == 1001
    assert crfuzzy.validate_model(model).ok()


def test_membership_and_fuzzify(model):
    signal = model.inputs[0]
    assert crfuzzy.fuzzify(signal, -60.0) == pytest.approx([0.0625, 1.0, 0.0625], abs=1e-12)
    low = signal.terms[0]
    assert crfuzzy.gaussian_membership(low.center, low) == 1.0
    assert crfuzzy.gaussian_membership(low.center + low.sigma, low) == pytest.approx(math.exp(-0.5), abs=1e-12)


def test_infer_at_centers(model):
    low = crfuzzy.infer(model, [-100.0, 0.0, 0.0, 0.0])
    high = crfuzzy.infer(model, [-20.0, 100.0, 1.0, 100.0])
    assert low.crisp_output == pytest.approx(0.775321609, abs=1e-9)
    assert high.crisp_output == pytest.approx(0.224678391, abs=1e-9)
    assert len(low.firing_strengths) == 81
    assert len(low.aggregated_curve) == 1001


def test_aggregate_and_centroid(model):
    strengths = [0.0] * 81
    strengths[40] = 1.0
    curve = crfuzzy.aggregate(model, strengths)
    assert crfuzzy.defuzzify_centroid(curve) == pytest.approx(0.5, abs=1e-3)


def test_decision_and_arbitrate(model):
    near = crfuzzy.Candidate("near", -100.0, 0.0, 0.0, 0.0)
    far = crfuzzy.Candidate("far", -20.0, 100.0, 1.0, 100.0)
    r = crfuzzy.decision_possibility(near, model, with_trace=True)
    assert r.admitted and r.trace is not None
    out = crfuzzy.arbitrate([far, near], model)
    assert out.winner_id == "near"
    assert [c.id for c in out.ranking] == ["near", "far"]
    assert crfuzzy.arbitrate([far], model, 0.9).winner_id is None


def test_sweep(model):
    res = crfuzzy.run_sweep(crfuzzy.figure_preset(7), model)
    assert len(res.grid) == 41 and len(res.grid[0]) == 41
    assert res.grid[0][0] > res.grid[40][0]
    csv = crfuzzy.format_surface_csv(res)
    assert csv.count("\n") == 42
    spec = crfuzzy.SweepSpec(
        crfuzzy.SweepAxis("signal_dbm", -120.0, -20.0, 3),
        crfuzzy.SweepAxis("distance_m", 0.0, 100.0, 3),
        {"velocity_kmh": 50.0, "spectrum_ratio": 0.5},
    )
    with pytest.raises(crfuzzy.SweepSpecError):
        crfuzzy.run_sweep(spec, model)


def test_document_round_trip(model):
    text = crfuzzy.serialize_model(model, 0.5)
    back, threshold = crfuzzy.parse_model(text)
    assert threshold == 0.5
    assert crfuzzy.serialize_model(back, threshold) == text
    assert crfuzzy.format_rules(model, "csv").startswith("row,signal_dbm,")


def test_errors(model):
    with pytest.raises(crfuzzy.ParseError):
        crfuzzy.parse_model("{")
    with pytest.raises(crfuzzy.ParseError):
        crfuzzy.parse_candidates_csv("id,a,b\n")
    with pytest.raises(crfuzzy.BatchError):
        crfuzzy.arbitrate([], model)
    with pytest.raises(crfuzzy.InvalidInputError):
        crfuzzy.infer(model, [float("nan"), 0.0, 0.0, 0.0])
    assert issubclass(crfuzzy.ParseError, crfuzzy.Error)
