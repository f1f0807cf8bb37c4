import os
import random

import numpy as np


def mkdirs(paths):
    if isinstance(paths, (str, os.PathLike)):
        paths = [paths]
    for path in paths:
        if path:
            os.makedirs(path, exist_ok=True)


def seed_everything(seed):
    # generators take explicit seeds; this only pins the global state for tools
    random.seed(seed)
    np.random.seed(seed)


def instance_name(path):
    """File stem used to name an instance read from ``path``."""
    return os.path.splitext(os.path.basename(str(path)))[0]
