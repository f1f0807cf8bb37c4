from .two_sat import TwoSatFormula, implication_graph, solve_2sat, solve_exhaustive
