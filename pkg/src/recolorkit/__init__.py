"""Recoloring reconfiguration for (P2+P3, C4)-free graphs.

Typical use::

    from recolorkit import build_family, parse_family, decide_recolorable, recolor_path
    g = build_family(parse_family("join(c6,k1)"))
    decide_recolorable(g).recolorable      # False
"""

from .errors import (ClassMismatch, FormatError, NotInClass, NotMixingAtEll, ParameterError,
                     RecolorError, SizeLimit, ThresholdTooLow)
from .families import FamilySpec, build_family, parse_family
from .graph import (Graph, check_frozen, check_locked, check_proper, chi, chromatic_number,
                    color_classes, degeneracy, format_coloring, format_graph, parse_coloring,
                    parse_graph, random_coloring)
from .oracle import (ReconfigSummary, build_reconfig, find_frozen, is_mixing, oracle_distance,
                     oracle_path, reconfig_diameter)
from .paths import RecolorPath, RecolorStep, make_path, parse_path
from .patterns import in_scope_class
from .pipeline import Decision, Verdict, decide_recolorable, recolor_path
from .recolor import renaming_path
from .structure import (c5_partition, c6_partition, decompose, format_certificate,
                        parse_certificate, recognize, validate_certificate)

__version__ = "0.1.0"
