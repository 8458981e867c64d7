"""ScreenAnt link-level simulator: transparent on-screen antenna arrays,
correlated Rayleigh uplink channels with user-induced blockage, and a
multi-start gradient-ascent beamforming optimizer benchmarked against a
non-coherent edge-mounted baseline."""

__version__ = "0.1.0"

from .beamforming import (
    BeamformingVector,
    OracleResult,
    canonical_phase,
    edgeant_weights,
    evaluate_se,
    mrt_oracle,
    snr,
    spectral_efficiency,
    weights,
)
from .blockage import (
    BlockageMask,
    BlockageSpec,
    DynamicBlockageFrame,
    apply_dynamic,
    apply_static,
    generate_finger_trajectory,
    generate_mask,
)
from .channel import (
    C_LIGHT,
    ChannelRealization,
    CorrelationMatrix,
    LinkParams,
    correlation_matrix,
    dbm_to_watts,
    path_loss,
    sample_channel,
    watts_to_dbm,
)
from .experiments import (
    DEFAULT_SWEEP_GRIDS,
    SWEEP_NAMES,
    EdgeConfig,
    LinkConfig,
    ScenarioConfig,
    ScreenConfig,
    SweepResult,
    TrialRecord,
    aggregate,
    run_sweep,
    run_trial,
    run_trials,
)
from .geometry import (
    ArrayGeometry,
    EdgeArrayConfig,
    ScreenArrayConfig,
    edge_layout,
    screen_layout,
)
from .optimizer import (
    OptimizerConfig,
    OptimizerTrace,
    ascend_step,
    grad_power,
    grad_theta,
    normalize_gradients,
    optimize,
)
