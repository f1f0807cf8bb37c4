import os
import sys
import time

from termcolor import colored

from . import util


class Visualizer():
    """Console and file log of recognition verdicts."""

    def __init__(self, opt):
        self.opt = opt
        self.name = opt.name
        self.log_dir = os.path.join(opt.logs_dir, opt.name) if getattr(opt, 'logs_dir', None) else None
        self.log_name = None

    def setup_io(self):
        if self.log_dir is None:
            return
        print('[*] create log directory:\n%s...' % os.path.abspath(self.log_dir), file=sys.stderr)
        util.mkdirs(self.log_dir)
        self.log_name = os.path.join(self.log_dir, 'verdicts.txt')
        with open(self.log_name, "a") as log_file:
            now = time.strftime("%c")
            log_file.write('================ Verdicts (%s) ================\n' % now)

    def print_verdict(self, source, verdict, t):
        message = f"[{self.name}] {source} mode: {verdict['mode']} result: {verdict['result']} (time: {t:.3f})"
        print(colored(message, 'green' if verdict['result'] == 'yes' else 'magenta'), file=sys.stderr)
        self._append(message)

    def print_error(self, source, error):
        message = f"[{self.name}] {source} error: {type(error).__name__}: {error}"
        print(colored(message, 'red'), file=sys.stderr)
        self._append(message)

    def _append(self, message):
        if self.log_name is not None:
            with open(self.log_name, "a") as log_file:
                log_file.write('%s\n' % message)
