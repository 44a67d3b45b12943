"""Deterministic model generators for fixtures, case studies and property tests."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from importlib import resources
from typing import Literal, Optional, Sequence

from ..errors import InvalidInterval
from ..model.imdp import IMDP, Row
from ..model.interval import Interval
from ..model.textformat import parse
from ..types import ONE, ZERO, Action, State

LEFT, RIGHT = "l", "r"

# (state, action) -> (interval to l, interval to r)
_PAIR_ROWS: dict[tuple[State, Action], tuple[str, str]] = {
    ("s", "a"): ("3/10,7/10", "0,1"),
    ("s", "b"): ("0,1", "1/5,3/5"),
    ("sbar", "a"): ("3/10,7/10", "0,1"),
    ("sbar", "c"): ("0,1", "7/10,4/5"),
    ("t", "a"): ("1/10,3/10", "4/5,1"),
    ("t", "b"): ("1/5,3/5", "0,1"),
    ("tbar", "c"): ("1/10,1", "2/5,9/10"),
    ("tbar", "d"): ("1/5,2/5", "0,4/5"),
    ("u", "a"): ("1/10,3/5", "0,1"),
    ("u", "b"): ("0,3/5", "0,1"),
    ("ubar", "a"): ("1/10,3/5", "0,1"),
    ("ubar", "c"): ("1/10,4/5", "0,1"),
}


def _interval(text: str) -> Interval:
    lo, hi = text.split(",")
    return Interval.of(lo, hi)


def _pairs_model(tops: Sequence[State]) -> IMDP:
    transitions: dict[tuple[State, Action], Row] = {
        (LEFT, "loop"): {LEFT: Interval.point(1)},
        (RIGHT, "loop"): {RIGHT: Interval.point(1)},
    }
    for (state, action), (left, right) in _PAIR_ROWS.items():
        if state in tops:
            transitions[(state, action)] = {
                LEFT: _interval(left),
                RIGHT: _interval(right),
            }
    return IMDP.build(
        states=[*tops, LEFT, RIGHT],
        transitions=transitions,
        labels={LEFT: {"left"}, RIGHT: {"right"}},
    )


def gen_pairs() -> IMDP:
    """
    The three pairs of top states ``s/sbar``, ``t/tbar`` and ``u/ubar`` over
    the absorbing targets ``l`` (label ``left``) and ``r`` (label ``right``).

    Cooperatively only ``t`` and ``tbar`` are bisimilar; competitively only
    ``u`` and ``ubar``.
    """
    return _pairs_model(["s", "sbar", "t", "tbar", "u", "ubar"])


def pairs_fragment(pair: Literal["s", "t", "u"]) -> IMDP:
    """One pair of top states with the shared targets."""
    if pair not in ("s", "t", "u"):
        raise ValueError(f"unknown fragment {pair!r}; expected s, t or u")
    return _pairs_model([pair, f"{pair}bar"])


def load_fixture(name: str) -> IMDP:
    """Parses a model shipped in ``intervalbisim/workbench/fixtures``."""
    path = resources.files(__package__ or "intervalbisim.workbench") / "fixtures" / name
    return parse(path.read_text(encoding="utf-8"))


def _check_failure_interval(p: Interval) -> None:
    if not p.is_well_formed:
        raise InvalidInterval(f"invalid failure interval {p}")
    if p.hi >= ONE:
        raise InvalidInterval(f"failure interval {p} must stay below 1")


def wsn_status(bits: Sequence[int]) -> State:
    return "w" + "".join(str(b) for b in bits)


def gen_wsn(sensors: int, p: Interval) -> IMDP:
    """
    The closed sensor network: one global state per failure vector.

    ``send_i`` fails sensor ``i`` with probability in ``p`` and leaves it (or
    puts it back) in working order with the complementary interval. A state
    is labelled ``f<k>`` for its ``k`` failed sensors.

    Raises:
        InvalidInterval: Unless ``p`` is well formed with ``p.hi < 1``.
    """
    if sensors < 1:
        raise ValueError("a sensor network needs at least one sensor")
    _check_failure_interval(p)
    succeed = p.complement()

    transitions: dict[tuple[State, Action], Row] = {}
    labels: dict[State, set[str]] = {}
    for bits in itertools.product((0, 1), repeat=sensors):
        state = wsn_status(bits)
        labels[state] = {f"f{sum(bits)}"}
        for i in range(sensors):
            failed = wsn_status([*bits[:i], 1, *bits[i + 1 :]])
            working = wsn_status([*bits[:i], 0, *bits[i + 1 :]])
            transitions[(state, f"send_{i + 1}")] = {failed: p, working: succeed}
    return IMDP.build(
        states=labels,
        transitions=transitions,
        labels=labels,
        initial=wsn_status([0] * sensors),
    )


def wsn_sensor(index: int, p: Interval) -> IMDP:
    """A single sensor with states ``ok<i>`` and ``fail<i>`` and action ``send_<i>``."""
    _check_failure_interval(p)
    ok, fail = f"ok{index}", f"fail{index}"
    action = f"send_{index}"
    row = {fail: p, ok: p.complement()}
    return IMDP.build(
        states=[ok, fail],
        transitions={(ok, action): row, (fail, action): row},
        labels={fail: {f"failed{index}"}},
        initial=ok,
    )


def wsn_gateway(sensors: int) -> IMDP:
    """The gateway: one state accepting ``receive_<i>`` from every sensor."""
    return IMDP.build(
        states=["g"],
        transitions={
            ("g", f"receive_{i}"): {"g": Interval.point(1)}
            for i in range(1, sensors + 1)
        },
        initial="g",
    )


_Status = tuple[str, ...]


def gen_csma(
    nodes: int,
    max_collisions: int,
    p_send: Interval,
    p_collide: Interval,
) -> IMDP:
    """
    A shared-channel protocol with per-node exponential back-off.

    Every node carries its own status: a back-off counter ``0..max_collisions``
    while it waits, ``d`` once delivered, ``x`` once it gave up. A state is
    the dot-joined statuses, ``0.0`` initially. ``send_i`` lets waiting node
    ``i`` transmit with probability in ``p_send / 2**c`` at counter ``c``.
    While another node still contends, the transmission collides with
    probability in ``p_collide``: every contender backs off one step, and a
    sender already at ``max_collisions`` gives up. A node alone on the
    channel never collides and has no back-off. States are labelled
    ``delivered<k>``, plus ``aborted<j>`` once ``j`` nodes gave up; states
    without a waiting node idle.

    Raises:
        InvalidInterval: If an interval is malformed.
    """
    if nodes < 2:
        raise ValueError("the protocol needs at least two nodes")
    if max_collisions < 1:
        raise ValueError("max_collisions must be at least 1")
    for interval in (p_send, p_collide):
        if not interval.is_well_formed:
            raise InvalidInterval(f"invalid interval {interval}")

    def waiting(status: _Status) -> list[int]:
        return [i for i, c in enumerate(status) if c.isdigit()]

    def settle(status: _Status) -> _Status:
        alone = waiting(status)
        if len(alone) != 1:
            return status
        return tuple("0" if k == alone[0] else c for k, c in enumerate(status))

    def delivered(status: _Status, i: int) -> _Status:
        return settle(tuple("d" if k == i else c for k, c in enumerate(status)))

    def collided(status: _Status, i: int) -> _Status:
        backed_off = []
        for k, c in enumerate(status):
            if not c.isdigit():
                backed_off.append(c)
            elif int(c) < max_collisions:
                backed_off.append(str(int(c) + 1))
            else:
                backed_off.append("x" if k == i else c)
        return settle(tuple(backed_off))

    def name(status: _Status) -> State:
        return ".".join(status)

    transitions: dict[tuple[State, Action], Row] = {}
    labels: dict[State, set[str]] = {}
    initial: _Status = ("0",) * nodes
    seen = {initial}
    frontier = [initial]
    while frontier:
        status = frontier.pop()
        state = name(status)
        labels[state] = {f"delivered{status.count('d')}"}
        if "x" in status:
            labels[state].add(f"aborted{status.count('x')}")
        contenders = waiting(status)
        if not contenders:
            transitions[(state, "idle")] = {state: Interval.point(1)}
            continue
        for i in contenders:
            attempt = p_send.scale(Fraction(1, 2 ** int(status[i])))
            row: dict[_Status, Interval] = {status: attempt.complement()}
            if len(contenders) == 1:
                row[delivered(status, i)] = attempt
            else:
                row[delivered(status, i)] = Interval(
                    attempt.lo * (ONE - p_collide.hi), attempt.hi * (ONE - p_collide.lo)
                )
                row[collided(status, i)] = Interval(
                    attempt.lo * p_collide.lo, attempt.hi * p_collide.hi
                )
            row = {t: b for t, b in row.items() if b.hi > ZERO}
            transitions[(state, f"send_{i + 1}")] = {name(t): b for t, b in row.items()}
            for target in row:
                if target not in seen:
                    seen.add(target)
                    frontier.append(target)

    return IMDP.build(
        states=labels,
        transitions=transitions,
        labels=labels,
        initial=name(initial),
    )


_SPREADS = (ZERO, Fraction(1, 10), Fraction(1, 5))


def _point_distribution(rng: random.Random, size: int) -> list[Fraction]:
    """``size`` positive multiples of 1/10 summing to 1."""
    cuts = sorted(rng.sample(range(1, 10), size - 1))
    edges = [0, *cuts, 10]
    return [Fraction(b - a, 10) for a, b in zip(edges, edges[1:])]


def random_imdp(
    rng: random.Random,
    *,
    max_states: int = 5,
    max_actions: int = 3,
    max_fanout: int = 3,
    props: Sequence[str] = ("a", "b"),
    twin_probability: float = 0.4,
    point_only: bool = False,
) -> IMDP:
    """
    A random valid model with at most ``max_states`` states.

    Each action widens a random point distribution (multiples of 1/10) by a
    spread of 0, 1/10 or 1/5, clipped to [0, 1]. With ``twin_probability`` a
    state copies the rows and the label of the previous one, so bisimilar
    pairs occur often. ``point_only`` keeps every interval a point.
    """
    count = rng.randint(1, max_states)
    states = [f"s{i}" for i in range(count)]
    label_choices: list[tuple[str, ...]] = [(), *((p,) for p in props)]

    transitions: dict[tuple[State, Action], Row] = {}
    labels: dict[State, tuple[str, ...]] = {}
    previous: Optional[State] = None
    for state in states:
        if previous is not None and rng.random() < twin_probability:
            labels[state] = labels[previous]
            for (s, a), row in list(transitions.items()):
                if s == previous:
                    transitions[(state, a)] = dict(row)
            previous = state
            continue

        labels[state] = rng.choice(label_choices)
        for k in range(rng.randint(1, max_actions)):
            fanout = rng.randint(1, min(max_fanout, count))
            targets = rng.sample(states, fanout)
            spread = ZERO if point_only else rng.choice(_SPREADS)
            transitions[(state, f"a{k}")] = {
                t: Interval(max(ZERO, p - spread), min(ONE, p + spread))
                for t, p in zip(targets, _point_distribution(rng, fanout))
            }
        previous = state

    return IMDP.build(states=states, transitions=transitions, labels=labels)
