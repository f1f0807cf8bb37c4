import sys

from omegaconf import OmegaConf
from termcolor import cprint

from graphs.sunflower import SunflowerInstance


def create_model(opt):
    model = None

    if opt.mode == 'proper':
        from models.proper_model import ProperModel
        model = ProperModel()
    elif opt.mode == 'unit':
        from models.unit_model import UnitModel
        model = UnitModel()
    else:
        raise ValueError('unknown recognition mode %r' % (opt.mode,))

    model.initialize(opt)
    cprint("[*] Model has been created: %s" % model.name(), 'blue', file=sys.stderr)
    return model


class BaseModel():
    """A recognizer for one representation mode.

    ``recognize`` answers the decision question, ``build_representation``
    turns a positive answer into intervals and ``certificate`` renders the
    evidence for the verdict line.
    """

    mode = None

    def name(self):
        return 'BaseModel'

    def initialize(self, opt):
        self.opt = opt
        self.cfg = getattr(opt, 'cfg', None)

    def option(self, key, default=None):
        """A dotted config value, or ``default`` when no config is loaded."""
        if self.cfg is None:
            return default
        value = OmegaConf.select(self.cfg, key)
        return default if value is None else value

    def recognize(self, inst: SunflowerInstance):
        raise NotImplementedError

    def build_representation(self, inst: SunflowerInstance, result):
        raise NotImplementedError

    def certificate(self, inst: SunflowerInstance, result, rep=None):
        return None

    def verdict(self, inst: SunflowerInstance, result, certificate=None):
        return {
            'result': 'yes' if result.yes else 'no',
            'mode': self.mode,
            'certificate': certificate,
        }
