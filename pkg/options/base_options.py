import argparse
import logging
import os
import sys

from omegaconf import OmegaConf

from utils.util import seed_everything

DEFAULT_CFG = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), 'configs', 'sunflower.yaml')


class BaseOptions():
    """Flags shared by every subcommand; subclasses add their own in
    ``initialize`` after calling ``BaseOptions.initialize(self)``."""

    prog = 'sunflower'

    def __init__(self):
        self.parser = argparse.ArgumentParser(prog=self.prog, formatter_class=argparse.ArgumentDefaultsHelpFormatter)
        self.initialized = False

    def initialize(self):
        # config stuff
        self.parser.add_argument('--cfg', type=str, default=DEFAULT_CFG, help='config file with caps and defaults')
        self.parser.add_argument('--set', type=str, action='append', default=None, metavar='KEY=VALUE', help='config override, repeatable, e.g. enum_space.cap=128')

        # log stuff
        self.parser.add_argument('--logs_dir', type=str, default=None, help='the root of the logs dir. Verdicts are appended under <logs_dir>/<name>')
        self.parser.add_argument('--name', type=str, default='sunflower', help='name of the run. It decides where to store verdict logs')
        self.parser.add_argument('--verbose', action='store_true', help='debug logging from the recognizers')
        self.parser.add_argument('--print_options', action='store_true', help='print the parsed options')

        # misc
        self.parser.add_argument('--seed', default=0, type=int, help='seed')

        self.initialized = True

    def load_cfg(self, path):
        cfg = OmegaConf.load(path)
        if self.opt.set:
            cfg = OmegaConf.merge(cfg, OmegaConf.from_dotlist(self.opt.set))
        return cfg

    def parse_and_setup(self, argv=None):
        if not self.initialized:
            self.initialize()

        self.opt = self.parser.parse_args(argv)
        self.opt.cfg = self.load_cfg(self.opt.cfg)

        logging.basicConfig(level=logging.DEBUG if self.opt.verbose else logging.WARNING,
                            format='%(levelname)s %(name)s: %(message)s', stream=sys.stderr)
        seed_everything(self.opt.seed)

        if self.opt.print_options:
            args = vars(self.opt)
            print('------------ Options -------------', file=sys.stderr)
            for k, v in sorted(args.items()):
                if k == 'cfg':
                    v = OmegaConf.to_container(v)
                print('%s: %s' % (str(k), str(v)), file=sys.stderr)
            print('-------------- End ----------------', file=sys.stderr)

        return self.opt
