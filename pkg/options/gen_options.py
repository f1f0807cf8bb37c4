from .base_options import BaseOptions


class GenOptions(BaseOptions):
    prog = 'sunflower gen'

    def initialize(self):
        BaseOptions.initialize(self)
        self.parser.add_argument('family', choices=['betweenness', 'random'], help='instance family')
        self.parser.add_argument('--out', type=str, required=True, help='instance JSON output path')

        # betweenness stuff
        self.parser.add_argument('--input', type=str, default=None, help='betweenness JSON; a random one is drawn when missing')
        self.parser.add_argument('--gadget', type=str, default=None, choices=['proper', 'unit'], help='gadget kind (default from gen.betweenness.gadget)')
        self.parser.add_argument('--n_ground', type=int, default=4, help='ground set size of a random betweenness instance')
        self.parser.add_argument('--n_triples', type=int, default=2, help='triples of a random betweenness instance')

        # random stuff
        self.parser.add_argument('--n_shared', type=int, default=None, help='shared vertices (default from gen.random.n_shared)')
        self.parser.add_argument('--n_private', type=int, default=None, help='private vertices per graph (default from gen.random.n_private)')
        self.parser.add_argument('--k', type=int, default=None, help='number of graphs (default from gen.random.k)')
        self.parser.add_argument('--extra_edges', type=int, default=None, help='random edges added inside single graphs; 0 keeps the instance unit-YES')
        self.parser.add_argument('--emit-representation', dest='emit_representation', type=str, default=None,
                                 help='random family without extra edges: write the generating representation here')


class BenchOptions(BaseOptions):
    prog = 'sunflower bench'

    def initialize(self):
        BaseOptions.initialize(self)
        self.parser.add_argument('--mode', type=str, required=True, choices=['proper', 'unit'], help='recognizer to time')
        self.parser.add_argument('--sizes', type=int, nargs='+', default=None, help='vertex counts (default from bench.<mode>.sizes)')
        self.parser.add_argument('--trials', type=int, default=None, help='runs per size (default from bench.trials)')
