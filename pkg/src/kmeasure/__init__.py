"""k-measures, Durfee squares and (k,m)-Durfee polygons of integer partitions."""

from kmeasure.bijection import (
    STRATEGIES,
    MembershipError,
    OffsetVector,
    Strategy,
    offset_vector,
    phi,
    psi,
    round_trip_check,
    select_forward,
    select_inverse,
)
from kmeasure.counting import CountTable, count_p, enumerate_partitions
from kmeasure.partition import (
    Partition,
    PartitionError,
    make_partition,
    parse_partition,
    replace_parts,
    subsequence_values,
)
from kmeasure.statistics import (
    PolygonShape,
    contains_km_polygon,
    durfee_polygon_order,
    durfee_side,
    k_measure,
    k_measure_oracle,
    km_polygon_shape,
)
from kmeasure.verify import VerificationReport

__version__ = "0.1.0"
