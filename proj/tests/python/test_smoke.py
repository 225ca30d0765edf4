import json

import pytest

import swapplanarity as sp


def test_predicates():
    assert sp.orient((0, 0), (1, 0), (0, 1)) == 1
    assert sp.orient((0, 0), (1, 0), (2, 0)) == 0
    assert sp.segments_cross((0, 0), (4, 4), (0, 4), (4, 0))
    assert not sp.segments_cross((0, 0), (4, 4), (4, 4), (8, 0))
    assert sp.in_circle((0, 0), (4, 0), (0, 4), (1, 1)) > 0


def test_eight_cycle():
    inst = sp.eight_cycle_fixture()
    assert inst.crossing_count() > 0
    report = sp.min_swaps(inst, max_depth=6)
    assert report.min_swaps == 6
    assert report.nodes_expanded < 1_000_000
    solved = inst.apply_moves(report.solutions[0])
    assert solved.is_solved()


def test_gadget_and_enumeration():
    report = sp.min_swaps(sp.basic_construction_fixture(), max_depth=3)
    assert report.min_swaps == 1
    assert report.solutions == [[0], [5]]
    assert sp.enumeration_size(20, 4) == 137180


def test_generate_round_trip():
    inst, report, moves = sp.generate_level(n=10, s=2, seed=5)
    assert inst.validate() == []
    assert report.min_swaps == 2
    assert inst.apply_moves(list(reversed(moves))).crossing_count() == 0
    text = inst.to_json()
    assert json.loads(text)["meta"]["seed"] == 5
    assert sp.Instance.from_json(text) == inst


def test_points_and_router():
    points, stats = sp.generate_points(2, 1966, seed=3)
    assert len(points) == 2 and stats["total_attempts"] == 2
    inst = sp.cycle_fixture(6)
    target = list(reversed(range(6)))
    moves = sp.route_to_assignment(inst, target)
    assert inst.apply_moves(moves).assignment == target


def test_equivalence_and_errors():
    inst, _, _ = sp.generate_level(n=9, s=1, seed=1)
    cert = sp.swap_equivalent(inst, inst)
    assert cert.verdict == "EQUIVALENT"
    with pytest.raises(sp.InstanceFormatError):
        sp.Instance.from_json('{"version": 1,')
    with pytest.raises(sp.GenerationError):
        sp.generate_level(n=3, m=3, s=1, seed=1)
