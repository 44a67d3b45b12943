from .generators import (
    gen_csma,
    gen_pairs,
    gen_wsn,
    load_fixture,
    pairs_fragment,
    random_imdp,
    wsn_gateway,
    wsn_sensor,
    wsn_status,
)
from .oracles import GridOracleConfig, classical_bounded_until, grid_containment_oracle
from .report import (
    Reduction,
    ReductionReport,
    minimise,
    reduction_report,
    render_table,
)

__all__ = [
    "GridOracleConfig",
    "Reduction",
    "ReductionReport",
    "classical_bounded_until",
    "gen_csma",
    "gen_pairs",
    "gen_wsn",
    "grid_containment_oracle",
    "load_fixture",
    "minimise",
    "pairs_fragment",
    "random_imdp",
    "reduction_report",
    "render_table",
    "wsn_gateway",
    "wsn_sensor",
    "wsn_status",
]
