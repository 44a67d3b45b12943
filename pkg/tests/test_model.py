import unittest
from fractions import Fraction

from intervalbisim.errors import InvalidInterval, SyncUncertainty
from intervalbisim.model import (
    IDLE_ACTION,
    IMDP,
    Interval,
    compose,
    metrics,
    parse_rational,
    product_state,
    validate,
)
from intervalbisim.workbench import gen_pairs, wsn_gateway, wsn_sensor


class TestInterval(unittest.TestCase):
    def test_parse_rational_is_exact(self):
        self.assertEqual(parse_rational("0.3"), Fraction(3, 10))
        self.assertEqual(parse_rational("3/5"), Fraction(3, 5))
        self.assertEqual(parse_rational(" 1 "), Fraction(1))

    def test_parse_rational_rejects_garbage(self):
        for text in ("", "abc", "1/0", "0.1.2", "1e-3"):
            with self.subTest(text=text):
                with self.assertRaises(ValueError):
                    parse_rational(text)

    def test_of_checks_bounds(self):
        self.assertEqual(Interval.of("0.1", "1/5"), Interval(Fraction(1, 10), Fraction(1, 5)))
        with self.assertRaises(InvalidInterval):
            Interval.of("0.5", "0.4")
        with self.assertRaises(InvalidInterval):
            Interval.of(0, 2)

    def test_complement_and_scale(self):
        p = Interval.of("0.1", "0.2")
        self.assertEqual(p.complement(), Interval.of("0.8", "0.9"))
        self.assertEqual(p.scale(Fraction(1, 2)), Interval.of("0.05", "0.1"))

    def test_predicates(self):
        self.assertTrue(Interval.point(1).is_point)
        self.assertTrue(Interval.point(0).is_zero)
        self.assertFalse(Interval(Fraction(1, 2), Fraction(1, 4)).is_well_formed)
        self.assertTrue(Interval.of(0, "1/2").contains(Fraction(1, 4)))
        self.assertEqual(Interval.of("0.2", "0.5").width, Fraction(3, 10))

    def test_str(self):
        self.assertEqual(str(Interval.of("0.1", "0.2")), "[1/10,1/5]")


class TestValidate(unittest.TestCase):
    def test_example_is_valid(self):
        report = validate(gen_pairs())
        self.assertTrue(report.ok)
        self.assertEqual(report.render(), "valid\n")

    def test_reports_every_defect(self):
        model = IMDP.build(
            states=["s", "t", "u"],
            transitions={
                ("s", "a"): {"t": Interval.of(0, "1/2")},
                ("t", "a"): {"t": Interval(Fraction(1, 2), Fraction(1, 4))},
            },
        )
        kinds = sorted(v.kind for v in validate(model).violations)
        self.assertEqual(
            kinds, ["infeasible", "infeasible", "malformed-interval", "no-enabled-action"]
        )

    def test_unknown_target(self):
        model = IMDP.build(
            states=["s"], transitions={("s", "a"): {"ghost": Interval.point(1)}}
        )
        report = validate(model)
        self.assertFalse(report.ok)
        self.assertIn("unknown-state", report.render())

    def test_empty_model(self):
        report = validate(IMDP.build(states=[], transitions={}))
        self.assertEqual([v.kind for v in report.violations], ["no-states"])


class TestMetrics(unittest.TestCase):
    def test_example_counts(self):
        m = metrics(gen_pairs())
        self.assertEqual(m.state_count, 8)
        self.assertEqual(m.transition_count, 14)
        self.assertEqual(m.max_fanout, 2)
        self.assertEqual(m.max_distinct_actions, 2)

    def test_identical_rows_count_once(self):
        row = {"s": Interval.point(1)}
        model = IMDP.build(states=["s"], transitions={("s", "a"): row, ("s", "b"): row})
        self.assertEqual(metrics(model).max_distinct_actions, 1)
        self.assertEqual(metrics(model).transition_count, 2)


class TestCompose(unittest.TestCase):
    p = Interval.of("0.1", "0.2")

    def test_sensors_interleave(self):
        product = compose(wsn_sensor(1, self.p), wsn_sensor(2, self.p), set())
        self.assertEqual(len(product.states), 4)
        self.assertEqual(product.initial, product_state("ok1", "ok2"))
        self.assertEqual(product.label(product_state("fail1", "fail2")), {"failed1", "failed2"})
        self.assertTrue(validate(product).ok)
        self.assertEqual(
            product.interval(product_state("ok1", "ok2"), "send_1", product_state("fail1", "ok2")),
            self.p,
        )

    def test_shared_actions_are_renamed(self):
        loop = IMDP.build(states=["x"], transitions={("x", "a"): {"x": Interval.point(1)}})
        product = compose(loop, loop, set())
        self.assertEqual(product.actions, ("a@1", "a@2"))

    def test_synchronised_actions_multiply(self):
        first = IMDP.build(
            states=["x", "y"],
            transitions={
                ("x", "go"): {"x": Interval.point("1/2"), "y": Interval.point("1/2")},
                ("y", "go"): {"y": Interval.point(1)},
            },
            initial="x",
        )
        second = IMDP.build(
            states=["p", "q"],
            transitions={
                ("p", "go"): {"q": Interval.point(1)},
                ("q", "go"): {"q": Interval.point(1)},
            },
            initial="p",
        )
        product = compose(first, second, {"go"})
        self.assertEqual(
            product.row("x|p", "go"),
            {"x|q": Interval.point("1/2"), "y|q": Interval.point("1/2")},
        )
        self.assertEqual(product.states, ("x|p", "x|q", "y|q"))

    def test_gateway_is_neutral(self):
        sensor = wsn_sensor(1, self.p)
        product = compose(sensor, wsn_gateway(1), {"receive_1"})
        rename = {s: product_state(s, "g") for s in sensor.states}
        self.assertEqual(product.states, tuple(sorted(rename.values())))
        self.assertEqual(product.actions, sensor.actions)
        self.assertEqual(product.initial, rename[sensor.initial])
        for s in sensor.states:
            self.assertEqual(product.label(rename[s]), sensor.label(s))
            self.assertEqual(product.enabled_actions(rename[s]), sensor.enabled_actions(s))
            for a in sensor.enabled_actions(s):
                self.assertEqual(
                    product.row(rename[s], a),
                    {rename[t]: i for t, i in sensor.row(s, a).items()},
                )

    def test_gateway_network(self):
        sync = {"receive_1", "receive_2"}
        sensors = compose(wsn_sensor(1, self.p), wsn_sensor(2, self.p), set())
        network = compose(sensors, wsn_gateway(2), sync)
        self.assertEqual(len(network.states), 4)
        self.assertEqual(network.actions, ("send_1", "send_2"))
        self.assertTrue(validate(network).ok)

    def test_associative(self):
        first = IMDP.build(
            states=["x", "y"],
            transitions={
                ("x", "go"): {"x": Interval.point("1/2"), "y": Interval.point("1/2")},
                ("y", "go"): {"y": Interval.point(1)},
            },
            initial="x",
        )
        second = IMDP.build(
            states=["p", "q"],
            transitions={
                ("p", "go"): {"q": Interval.point(1)},
                ("q", "go"): {"q": Interval.point(1)},
            },
            initial="p",
        )
        third = wsn_sensor(3, self.p)
        left = compose(compose(first, second, {"go"}), third, set())
        right = compose(first, compose(second, third, set()), {"go"})
        self.assertEqual(left, right)
        self.assertEqual(len(left.states), 6)

        sensors = [wsn_sensor(i, self.p) for i in (1, 2, 3)]
        self.assertEqual(
            compose(compose(sensors[0], sensors[1], set()), sensors[2], set()),
            compose(sensors[0], compose(sensors[1], sensors[2], set()), set()),
        )

    def test_uncertain_sync_is_rejected(self):
        uncertain = IMDP.build(
            states=["x"], transitions={("x", "go"): {"x": Interval.of("1/2", 1)}}
        )
        certain = IMDP.build(states=["p"], transitions={("p", "go"): {"p": Interval.point(1)}})
        with self.assertRaises(SyncUncertainty) as caught:
            compose(uncertain, certain, {"go"})
        self.assertEqual(caught.exception.component, 1)

    def test_deadlock_gets_idle_loop(self):
        first = IMDP.build(states=["p"], transitions={("p", "s"): {"p": Interval.point(1)}})
        second = IMDP.build(states=["q"], transitions={("q", "t"): {"q": Interval.point(1)}})
        product = compose(first, second, {"s", "t"})
        self.assertEqual(product.enabled_actions("p|q"), (IDLE_ACTION,))
        self.assertTrue(validate(product).ok)


if __name__ == "__main__":
    unittest.main()
