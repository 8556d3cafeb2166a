from .errors import *
from .channel import ChannelSpec, effective_l, CRITICAL_L
from .shell_config import ShellConfig, normalize_config, negative_part
from .measure import AtomicMeasure
from .tail_model import FiniteTail, PeriodicTail, HarmonicTail, SampledTail, TailModel
from .verdict import Status, Verdict
from .data_structures import *
