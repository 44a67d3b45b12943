"""Regenerates the CSMA and WSN reduction table."""

import argparse
import sys

from rich.console import Console
from rich.progress import BarColumn, Progress, SpinnerColumn, TextColumn
from rich.theme import Theme
from rich.traceback import install

from intervalbisim.model.interval import Interval
from intervalbisim.types import BisimKind
from intervalbisim.workbench import gen_csma, gen_wsn, minimise, render_table

install()

console = Console(
    stderr=True,
    theme=Theme({"success": "bold green", "error": "bold red", "info": "cyan"}),
)

CSMA_MATRIX = [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2)]
WSN_SENSORS = [2, 4, 6, 8]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--semantics", choices=["coop", "comp"], default="coop")
    parser.add_argument("--jobs", type=int, default=1)
    args = parser.parse_args()
    kind = BisimKind(args.semantics)

    send = Interval.of("1/2", "3/5")
    collide = Interval.of("1/5", "3/10")
    failure = Interval.of("1/10", "1/5")
    jobs = [
        (f"csma {n} nodes / {c} collisions", lambda n=n, c=c: gen_csma(n, c, send, collide))
        for n, c in CSMA_MATRIX
    ] + [(f"wsn {n} sensors", lambda n=n: gen_wsn(n, failure)) for n in WSN_SENSORS]

    rows = []
    with Progress(
        SpinnerColumn(),
        TextColumn("[progress.description]{task.description}"),
        BarColumn(),
        console=console,
        transient=True,
    ) as progress:
        task = progress.add_task("[info]Minimising...", total=len(jobs))
        for name, build in jobs:
            progress.update(task, description=f"[info]{name}")
            rows.append((name, minimise(build(), kind, jobs=args.jobs).report))
            progress.advance(task)

    sys.stdout.write(render_table(rows))
    console.print(f"[success]{len(rows)} models minimised[/success]")
    return 0


if __name__ == "__main__":
    sys.exit(main())
