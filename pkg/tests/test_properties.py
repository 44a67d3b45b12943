"""Randomised batteries over small models; every run uses fixed seeds."""

import random
import unittest
from fractions import Fraction

from intervalbisim.bisim import (
    bisimulation,
    brute_force_bisimulation,
    initial_partition,
    quotient,
    representative,
)
from intervalbisim.bisim.oracle import _corner_program
from intervalbisim.errors import OracleBoundExceeded
from intervalbisim.geometry import (
    ClassPolytope,
    HullFamily,
    combination_count,
    containing_mixture,
    hull_equal,
    member_of_hull,
    mixture_contained,
    remaining_polytopes,
    state_polytopes,
    strictly_minimal,
    vertices,
    weight_grid,
)
from intervalbisim.model import IMDP, Interval, metrics
from intervalbisim.semantics import QuantifierMode, check_state_formula, extremal_bounded_until
from intervalbisim.semantics.formulas import And, Atom, Not, StateFormula, TrueFormula
from intervalbisim.types import BisimKind
from intervalbisim.workbench import (
    GridOracleConfig,
    classical_bounded_until,
    gen_wsn,
    grid_containment_oracle,
    random_imdp,
)

MODELS = 200
PRESERVED = {
    BisimKind.COOPERATIVE: (QuantifierMode.MINMIN, QuantifierMode.MAXMAX),
    BisimKind.COMPETITIVE: (QuantifierMode.MAXIMIN, QuantifierMode.MINIMAX),
}


def battery(seed: int, count: int, **options) -> list[IMDP]:
    rng = random.Random(seed)
    return [random_imdp(rng, **options) for _ in range(count)]


def random_state_formula(rng: random.Random) -> StateFormula:
    return rng.choice(
        [TrueFormula(), Atom("a"), Atom("b"), Not(Atom("a")), And(Not(Atom("a")), Not(Atom("b")))]
    )


def queries(rng: random.Random, count: int) -> list[tuple[StateFormula, StateFormula, int]]:
    return [
        (random_state_formula(rng), random_state_formula(rng), rng.randint(0, 4))
        for _ in range(count)
    ]


class TestGeneratorLaws(unittest.TestCase):
    def test_wsn_quotient_law(self):
        p = Interval.of("0.1", "0.2")
        for sensors in range(1, 11):
            with self.subTest(sensors=sensors):
                model = gen_wsn(sensors, p)
                self.assertEqual(len(model.states), 2**sensors)
                self.assertEqual(len(bisimulation(model, BisimKind.COOPERATIVE)), sensors + 1)

    def test_wsn_law_for_other_intervals(self):
        for p in (Interval.of("1/100", "1/100"), Interval.of("0.3", "0.9"), Interval.of("1/2", "1/2")):
            with self.subTest(p=p):
                self.assertEqual(len(bisimulation(gen_wsn(4, p), BisimKind.COOPERATIVE)), 5)


class TestCornerBound(unittest.TestCase):
    def test_vertex_count(self):
        rng = random.Random(2024)
        for _ in range(500):
            size = rng.randint(1, 5)
            cuts = sorted(rng.randint(0, 20) for _ in range(size - 1))
            edges = [0, *cuts, 20]
            centre = [Fraction(b - a, 20) for a, b in zip(edges, edges[1:])]
            bounds = tuple(
                Interval(
                    max(Fraction(0), c - Fraction(rng.randint(0, 4), 20)),
                    min(Fraction(1), c + Fraction(rng.randint(0, 4), 20)),
                )
                for c in centre
            )
            polytope = ClassPolytope(blocks=tuple(range(size)), bounds=bounds)
            free = sum(1 for b in bounds if b.lo != b.hi)
            corners = vertices(polytope)
            with self.subTest(bounds=bounds):
                self.assertGreaterEqual(len(corners), 1)
                self.assertLessEqual(len(corners), max(1, free * 2 ** (free - 1)))
                self.assertTrue(all(polytope.contains(v) for v in corners))


class TestOracleEquivalence(unittest.TestCase):
    def test_refinement_matches_brute_force(self):
        for index, model in enumerate(battery(1, MODELS)):
            for kind in BisimKind:
                with self.subTest(model=index, kind=kind):
                    self.assertEqual(bisimulation(model, kind), brute_force_bisimulation(model, kind))

    def test_generator_bounds(self):
        for model in battery(1, MODELS):
            m = metrics(model)
            self.assertLessEqual(m.state_count, 5)
            self.assertLessEqual(m.max_distinct_actions, 3)
            self.assertLessEqual(m.max_fanout, 3)


class TestPreservation(unittest.TestCase):
    def test_merged_states_share_extremal_values(self):
        rng = random.Random(5)
        for index, model in enumerate(battery(5, MODELS)):
            battery_queries = queries(rng, 20)
            for kind, modes in PRESERVED.items():
                partition = bisimulation(model, kind)
                merged = [b for b in partition.blocks if len(b) > 1]
                if not merged:
                    continue
                for left, right, horizon in battery_queries:
                    left_states = check_state_formula(model, left)
                    right_states = check_state_formula(model, right)
                    for mode in modes:
                        values = extremal_bounded_until(
                            model, left_states, right_states, horizon, mode
                        )
                        for block in merged:
                            with self.subTest(model=index, kind=kind, mode=mode, block=block):
                                self.assertEqual(len({values[s] for s in block}), 1)

    def test_quotient_soundness(self):
        rng = random.Random(9)
        for index, model in enumerate(battery(9, MODELS)):
            battery_queries = queries(rng, 5)
            for kind, modes in PRESERVED.items():
                partition = bisimulation(model, kind)
                reduced = quotient(model, partition)
                for left, right, horizon in battery_queries:
                    full_left = check_state_formula(model, left)
                    full_right = check_state_formula(model, right)
                    small_left = check_state_formula(reduced, left)
                    small_right = check_state_formula(reduced, right)
                    for mode in modes:
                        full = extremal_bounded_until(model, full_left, full_right, horizon, mode)
                        small = extremal_bounded_until(
                            reduced, small_left, small_right, horizon, mode
                        )
                        for s in model.states:
                            with self.subTest(model=index, kind=kind, mode=mode, state=s):
                                rep = representative(partition.block(s))
                                self.assertEqual(full[s], small[rep])


class TestDegenerateCollapse(unittest.TestCase):
    def test_point_intervals_match_classical_iteration(self):
        rng = random.Random(13)
        for index, model in enumerate(battery(13, 100, point_only=True)):
            for left, right, horizon in queries(rng, 3):
                left_states = check_state_formula(model, left)
                right_states = check_state_formula(model, right)
                low = classical_bounded_until(model, left_states, right_states, horizon, "min")
                high = classical_bounded_until(model, left_states, right_states, horizon, "max")
                for mode in QuantifierMode:
                    expected = high if mode.scheduler == "max" else low
                    with self.subTest(model=index, mode=mode):
                        self.assertEqual(
                            extremal_bounded_until(
                                model, left_states, right_states, horizon, mode
                            ),
                            expected,
                        )


class TestValueOrdering(unittest.TestCase):
    def test_mode_ordering(self):
        rng = random.Random(25)
        for index, model in enumerate(battery(25, 100)):
            for left, right, horizon in queries(rng, 3):
                left_states = check_state_formula(model, left)
                right_states = check_state_formula(model, right)
                values = {
                    mode: extremal_bounded_until(model, left_states, right_states, horizon, mode)
                    for mode in QuantifierMode
                }
                for s in model.states:
                    with self.subTest(model=index, state=s, horizon=horizon):
                        low = values[QuantifierMode.MINMIN][s]
                        high = values[QuantifierMode.MAXMAX][s]
                        for middle in (QuantifierMode.MAXIMIN, QuantifierMode.MINIMAX):
                            self.assertLessEqual(low, values[middle][s])
                            self.assertLessEqual(values[middle][s], high)

    def test_values_grow_with_horizon(self):
        rng = random.Random(29)
        for index, model in enumerate(battery(29, 100)):
            left, right, _ = queries(rng, 1)[0]
            left_states = check_state_formula(model, left)
            right_states = check_state_formula(model, right)
            for mode in QuantifierMode:
                runs = [
                    extremal_bounded_until(model, left_states, right_states, k, mode)
                    for k in range(5)
                ]
                for k, (shorter, longer) in enumerate(zip(runs, runs[1:])):
                    for s in model.states:
                        with self.subTest(model=index, mode=mode, horizon=k, state=s):
                            self.assertLessEqual(shorter[s], longer[s])


class TestHullFamilies(unittest.TestCase):
    def test_order_and_duplicates_do_not_matter(self):
        for index, model in enumerate(battery(33, 30)):
            partition = initial_partition(model)
            families = {
                s: list(state_polytopes(model, s, partition).values()) for s in model.states
            }
            for s, members in families.items():
                family = HullFamily.of(members)
                shuffled = HullFamily.of([*reversed(members), *members[:1]])
                with self.subTest(model=index, state=s):
                    self.assertTrue(hull_equal(family, shuffled))
                    for t, others in families.items():
                        self.assertEqual(
                            hull_equal(family, HullFamily.of(others)),
                            hull_equal(shuffled, HullFamily.of([*others, *others])),
                        )

    def test_grid_points_of_a_polytope_are_in_its_hull(self):
        rng = random.Random(37)
        for _ in range(40):
            size = rng.randint(1, 3)
            bounds = tuple(
                Interval(Fraction(lo, 8), Fraction(hi, 8))
                for lo, hi in (sorted(rng.sample(range(9), 2)) for _ in range(size))
            )
            if not sum(b.lo for b in bounds) <= 1 <= sum(b.hi for b in bounds):
                continue
            polytope = ClassPolytope(blocks=tuple(range(size)), bounds=bounds)
            family = HullFamily.of([polytope])
            for point in weight_grid(size, 8):
                if polytope.contains(point):
                    with self.subTest(bounds=bounds, point=point):
                        self.assertTrue(member_of_hull(point, family))


class TestMinimality(unittest.TestCase):
    def test_grid_witness_refutes_strict_minimality(self):
        config = GridOracleConfig(denominator=8, combination_cap=50_000)
        for index, model in enumerate(battery(17, 100, max_actions=3)):
            partition = initial_partition(model)
            for s in model.states:
                for a in model.enabled_actions(s):
                    try:
                        witness = grid_containment_oracle(model, s, a, partition, config)
                    except OracleBoundExceeded:
                        continue
                    if witness:
                        with self.subTest(model=index, state=s, action=a):
                            self.assertFalse(strictly_minimal(model, s, a, partition))

    def test_reduced_program_matches_corner_enumeration(self):
        for index, model in enumerate(battery(21, 100)):
            partition = initial_partition(model)
            for s in model.states:
                polytopes = state_polytopes(model, s, partition)
                for a, target in polytopes.items():
                    remaining = remaining_polytopes(target, list(polytopes.values()))
                    rho = containing_mixture(target, remaining)
                    if rho is None:
                        continue
                    with self.subTest(model=index, state=s, action=a):
                        self.assertEqual(sum(rho), 1)
                        self.assertTrue(mixture_contained(rho, remaining, target))

    def test_corner_program_matches_reduced_program(self):
        for index, model in enumerate(battery(41, 60)):
            partition = initial_partition(model)
            for s in model.states:
                polytopes = state_polytopes(model, s, partition)
                for a, target in polytopes.items():
                    remaining = remaining_polytopes(target, list(polytopes.values()))
                    if not remaining or combination_count(remaining) > 2_000:
                        continue
                    rho = _corner_program(target, remaining)
                    with self.subTest(model=index, state=s, action=a):
                        self.assertEqual(rho is None, containing_mixture(target, remaining) is None)
                        if rho is not None:
                            self.assertTrue(mixture_contained(rho, remaining, target))


if __name__ == "__main__":
    unittest.main()
