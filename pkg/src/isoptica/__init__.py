"""Isoptic curves, constant-angle shapes and constant-angle billiards.

Library layout:

- geometry: angles, points, oriented lines, circle intersections
- shapes: support-function bodies, tangents, angle of sight
- billiard: the constant-angle billiard on a circle
- construction: exact constant-angle shapes, arc extension, envelopes
- isoptics: isoptic curves and circle fitting
- outer: the outer constant-angle billiard
- classify: the parity dichotomy for rational angles
- serialize / svg / plotting / cli: file formats and the command line
"""

from .billiard import (BilliardState, OrbitRecord, chord, closure_steps,
                       find_regular_start, orbit, slope_gap, step, step_double,
                       step_inverse)
from .classify import Classification, RationalAngle, antiperiodic_modes, classify
from .construction import (beta_from_tangents, beta_function_of, beta_residual,
                           build_shape, envelope_from_lines, rigid_extend_theta)
from .errors import (BetaOutOfRange, BracketingFailed, ConvexityViolated,
                     DegenerateFit, IsopticaError, NoSignChange, NotCoprime,
                     OutOfRange, ParallelLines, ParityObstruction,
                     PointInsideShape, ShapeFileError, UnsupportedForPolygon)
from .geometry import (OrientedLine, Point2, angle_distance, intersect_lines,
                       line_circle_intersections, normalize_angle,
                       signed_angle_diff, unit_vector)
from .isoptics import CircleFit, IsopticCurve, circle_fit, isoptic_curve
from .outer import OuterState, detect_period, initial_state, outer_step
from .profiles import AntiPeriodicProfile, ThetaArcProfile
from .serialize import load_shape, save_shape, shape_from_dict, shape_to_dict
from .shapes import (Disk, Ellipse, FourierSupport, Polygon, SinBeta,
                     SupportShape, angle_of_sight, boundary_point, support_eval,
                     tangents_from)

__version__ = "0.1.0"
