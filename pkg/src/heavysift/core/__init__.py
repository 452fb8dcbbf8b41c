"""Observables, deficit traces, heaviness predicates and heavy-point searches."""

from heavysift.core.observables import IndicatorObservable
from heavysift.core.observables import Observable
from heavysift.core.observables import StepObservable
from heavysift.core.observables import TableObservable
from heavysift.core.observables import constant_observable
from heavysift.core.search import find_heavy_candidate
from heavysift.core.search import scan_candidates
from heavysift.core.search import two_sided_search
from heavysift.core.trace import DeficitTrace
from heavysift.core.trace import HeavinessReport
from heavysift.core.trace import deficit_trace
from heavysift.core.trace import heavy_through
from heavysift.core.trace import heavy_window
from heavysift.core.trace import psi
from heavysift.core.trace import two_sided_trace
