"""swarmlab: swarm-intelligence optimizers with convergence diagnostics.

Five population algorithms (particle swarm, bat, firefly, cuckoo
search, flower pollination) behind one step contract, plus the analysis
machinery to study them: eigenvalue bifurcation of the particle-swarm
dynamics, empirical Markov chains with spectral-gap estimation,
population diversity, sub-swarm detection, and a parameter tuning /
control harness. See the CLI (``swarmlab run|compare|tune|analyze``)
for reproducible end-to-end runs.
"""

from .algorithms import (ALGORITHM_NAMES, BatParams, BatState, CuckooParams,
                         FireflyParams, FpaParams, PsoParams, bat_schedules,
                         bat_step, cuckoo_step, default_params, firefly_step,
                         fpa_step, make_stepper, pso_step)
from .benchmarks import BenchmarkFunction, four_peaks, registry_lookup
from .core import (Agent, Population, SearchSpace, Trace, clamp_to_bounds,
                   evaluate_and_update_bests, initialize_population)
from .diagnostics import (ChainModel, SubswarmReport, count_subswarms,
                          discretize_positions, diversity_variance,
                          empirical_transition_matrix, pso_eigenvalues,
                          second_eigenvalue)
from .errors import (ConfigError, ContractError, InvalidArgumentError,
                     InvalidSpaceError, NumericError, SwarmlabError)
from .kernels import BACKEND_NAME
from .rng import RngStream
from .runner import RunConfig, run_optimization
from .samplers import (LevyParams, gaussian_vector, heaviside, levy_step,
                       levy_vector, mantegna_sigma, uniform_vector)
from .tuning import (ParamRange, TuningReport, grid_parametric_study,
                     stochastic_parameter_control)

__version__ = "0.1.0"
