from .base_options import BaseOptions


class ValidateOptions(BaseOptions):
    prog = 'sunflower validate'

    def initialize(self):
        BaseOptions.initialize(self)
        self.parser.add_argument('inputs', nargs='+', help='instance JSON files')


class RecognizeOptions(BaseOptions):
    prog = 'sunflower recognize'

    def initialize(self):
        BaseOptions.initialize(self)
        self.parser.add_argument('inputs', nargs='+', help='instance JSON files; one verdict line each, in order')
        self.parser.add_argument('--mode', type=str, required=True, choices=['proper', 'unit'], help='representation class to recognize')
        self.parser.add_argument('--emit-representation', dest='emit_representation', type=str, default=None,
                                 help='write the representation of a YES instance here')
        self.parser.add_argument('--emit-certificate', dest='emit_certificate', type=str, default=None,
                                 help='write the verdict certificate here')
        self.parser.add_argument('--emit-svg', dest='emit_svg', type=str, default=None,
                                 help='draw the representation of a YES instance here')
        self.parser.add_argument('--explain', action='store_true',
                                 help='unit NO: scan the enumeration space for conflicts (capped by enum_space.cap)')


class OracleOptions(BaseOptions):
    prog = 'sunflower oracle'

    def initialize(self):
        BaseOptions.initialize(self)
        self.parser.add_argument('input', help='instance JSON file')
        self.parser.add_argument('--mode', type=str, required=True, choices=['proper', 'unit'], help='representation class to decide')
        self.parser.add_argument('--representation', type=str, default=None,
                                 help='check this representation JSON instead of deciding the instance')


class RenderOptions(BaseOptions):
    prog = 'sunflower render'

    def initialize(self):
        BaseOptions.initialize(self)
        self.parser.add_argument('representation', help='representation JSON file')
        self.parser.add_argument('instance', help='instance JSON file')
        self.parser.add_argument('--out', type=str, required=True, help='SVG output path')
