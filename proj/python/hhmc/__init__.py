"""Numerical checker for endpoint-weighted integral inequalities under m-convexity.

The compiled extension carries the full API: function catalog (`make_function`,
`power_fn`, ...), adaptive quadrature (`integrate`), the m-convexity oracle
(`check_m_convex`, `check_abs_deriv_m_convex`), the inequality evaluators
(`lhs_general`, `bound_thm3/4/5`, `bound_cor1/2/3`, `full_report`), special
means (`arithmetic_mean`, `log_mean`, `gen_log_mean`, `prop1_check`,
`prop2_check`), and the sweep harness (`run_sweep_json`).
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__, __version__  # noqa: F401
