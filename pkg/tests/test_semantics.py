import unittest
from fractions import Fraction

from intervalbisim.errors import ParseError, UnboundedUntil
from intervalbisim.model import Interval
from intervalbisim.semantics import (
    And,
    Atom,
    BoundedUntil,
    Comparison,
    Next,
    Not,
    Prob,
    Quantifier,
    QuantifierMode,
    TrueFormula,
    Until,
    check_state_formula,
    evaluate,
    extremal_bounded_until,
    extremal_next,
    inner_optimum,
    parse_formula,
)
from intervalbisim.workbench import gen_pairs, pairs_fragment

F = Fraction


class TestModes(unittest.TestCase):
    def test_players(self):
        self.assertEqual(
            [(m.scheduler, m.nature) for m in QuantifierMode],
            [("min", "min"), ("max", "max"), ("max", "min"), ("min", "max")],
        )

    def test_quantifier_reduction(self):
        expected = {
            (Quantifier.FORALL, Comparison.GE): QuantifierMode.MINMIN,
            (Quantifier.FORALL, Comparison.LE): QuantifierMode.MAXMAX,
            (Quantifier.EXISTS, Comparison.GT): QuantifierMode.MAXMAX,
            (Quantifier.EXISTS, Comparison.LT): QuantifierMode.MINMIN,
            (Quantifier.SCHED, Comparison.GE): QuantifierMode.MAXIMIN,
            (Quantifier.SCHED, Comparison.LE): QuantifierMode.MINIMAX,
            (Quantifier.NATURE, Comparison.GE): QuantifierMode.MINIMAX,
            (Quantifier.NATURE, Comparison.LE): QuantifierMode.MAXIMIN,
        }
        for (quantifier, comparison), mode in expected.items():
            with self.subTest(quantifier=quantifier, comparison=comparison):
                self.assertIs(quantifier.mode_for(comparison), mode)

    def test_comparison(self):
        self.assertTrue(Comparison.GE.holds(F(1, 2), F(1, 2)))
        self.assertFalse(Comparison.GT.holds(F(1, 2), F(1, 2)))
        self.assertTrue(Comparison.LT.holds(F(1, 3), F(1, 2)))


class TestValueIteration(unittest.TestCase):
    def setUp(self):
        self.model = gen_pairs()
        self.right = self.model.states_with("right")

    def test_inner_optimum(self):
        row = {"l": Interval.of("0.1", "0.3"), "r": Interval.of("0.8", "1")}
        values = {"l": F(0), "r": F(1)}
        self.assertEqual(inner_optimum(row, values, "max"), F(9, 10))
        self.assertEqual(inner_optimum(row, values, "min"), F(4, 5))

    def test_maximin_separates_t_and_tbar(self):
        values = extremal_next(pairs_fragment("t"), self.right, QuantifierMode.MAXIMIN)
        self.assertEqual(values["t"], F(4, 5))
        self.assertEqual(values["tbar"], F(3, 5))

    def test_cooperative_values_of_t_pair(self):
        for mode in (QuantifierMode.MINMIN, QuantifierMode.MAXMAX):
            with self.subTest(mode=mode):
                values = extremal_next(self.model, self.right, mode)
                self.assertEqual(values["t"], values["tbar"])

    def test_bounded_until(self):
        everything = set(self.model.states)
        maxmax = extremal_bounded_until(self.model, everything, self.right, 1, QuantifierMode.MAXMAX)
        self.assertEqual((maxmax["u"], maxmax["ubar"]), (F(1), F(9, 10)))
        minmin = extremal_next(self.model, self.right, QuantifierMode.MINMIN)
        self.assertEqual(minmin["u"], F(2, 5))

    def test_horizon_zero_and_absorbing_targets(self):
        everything = set(self.model.states)
        values = extremal_bounded_until(self.model, everything, self.right, 0, QuantifierMode.MAXMAX)
        self.assertEqual(values["r"], 1)
        self.assertEqual(values["u"], 0)
        later = extremal_bounded_until(self.model, everything, self.right, 4, QuantifierMode.MINMIN)
        self.assertEqual(later["r"], 1)
        self.assertEqual(later["l"], 0)

    def test_states_outside_left_stay_zero(self):
        values = extremal_bounded_until(self.model, set(), self.right, 3, QuantifierMode.MAXMAX)
        self.assertEqual(values["t"], 0)

    def test_negative_horizon(self):
        with self.assertRaises(ValueError):
            extremal_bounded_until(self.model, set(), self.right, -1, QuantifierMode.MAXMAX)

    def test_parallel_steps(self):
        everything = set(self.model.states)
        for mode in QuantifierMode:
            with self.subTest(mode=mode):
                self.assertEqual(
                    extremal_bounded_until(self.model, everything, self.right, 3, mode, jobs=4),
                    extremal_bounded_until(self.model, everything, self.right, 3, mode),
                )


class TestParser(unittest.TestCase):
    def test_bounded_until_with_mode(self):
        formula = parse_formula('P>=0.7 [ "a" U<=4 "b" ] mode=maximin')
        self.assertEqual(
            formula,
            Prob(
                Comparison.GE,
                F(7, 10),
                BoundedUntil(Atom("a"), Atom("b"), 4),
                QuantifierMode.MAXIMIN,
            ),
        )

    def test_default_quantifier(self):
        formula = parse_formula('P>=1/2 [ X "a" ]')
        self.assertIsInstance(formula, Prob)
        self.assertEqual(formula.mode, QuantifierMode.MINMIN)
        self.assertEqual(formula.quantifier, Quantifier.FORALL)

    def test_quantifier_names(self):
        formula = parse_formula('P<=1/2 [ X "a" ] mode=nature')
        self.assertEqual(formula.mode, QuantifierMode.MAXIMIN)
        self.assertEqual(formula.quantifier, Quantifier.NATURE)

    def test_boolean_structure(self):
        formula = parse_formula('!"a" & (true & "b")')
        self.assertEqual(formula, And(Not(Atom("a")), And(TrueFormula(), Atom("b"))))
        self.assertEqual(parse_formula("false"), Not(TrueFormula()))

    def test_nested_probability(self):
        formula = parse_formula('P>0 [ X P>=1 [ X "goal" ] ]')
        self.assertIsInstance(formula.path, Next)
        self.assertIsInstance(formula.path.operand, Prob)

    def test_unbounded_until_parses(self):
        formula = parse_formula('P>=0.5 [ true U "b" ]')
        self.assertEqual(formula.path, Until(TrueFormula(), Atom("b")))

    def test_str_round_trip(self):
        text = 'P>=7/10 [ "a" U<=4 "b" ] mode=sched'
        self.assertEqual(str(parse_formula(text)), text)

    def test_errors(self):
        cases = {
            'P>=1.5 [ X "a" ]': 4,
            '"a" &': 6,
            'P>=0.5 [ X "a" ] mode=sometimes': 23,
            'P>=0.5 [ "a" U<3 "b" ]': 15,
            '"a" "b"': 5,
            '""': 1,
        }
        for text, column in cases.items():
            with self.subTest(text=text):
                with self.assertRaises(ParseError) as caught:
                    parse_formula(text)
                self.assertEqual((caught.exception.line, caught.exception.column), (1, column))


class TestChecker(unittest.TestCase):
    def setUp(self):
        self.model = gen_pairs()

    def test_threshold_set(self):
        formula = parse_formula('P>=0.7 [ X "right" ] mode=maximin')
        self.assertEqual(check_state_formula(self.model, formula), {"r", "sbar", "t"})

    def test_evaluate_reports_values(self):
        verdicts = evaluate(self.model, parse_formula('P>=0.7 [ X "right" ] mode=maximin'))
        self.assertEqual(verdicts["t"], (True, F(4, 5)))
        self.assertEqual(verdicts["tbar"], (False, F(3, 5)))

    def test_evaluate_without_probability(self):
        verdicts = evaluate(self.model, parse_formula('!"left"'))
        self.assertEqual(verdicts["l"], (False, None))
        self.assertEqual(verdicts["u"], (True, None))

    def test_unbounded_until_is_rejected(self):
        with self.assertRaises(UnboundedUntil):
            check_state_formula(self.model, parse_formula('P>=0.5 [ true U "right" ]'))


if __name__ == "__main__":
    unittest.main()
