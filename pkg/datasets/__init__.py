from .betweenness import (BetweennessInstance, gen_betweenness_proper, gen_betweenness_unit,
                          place_betweenness_unit)
from .random_instances import gen_random_any, gen_random_yes
