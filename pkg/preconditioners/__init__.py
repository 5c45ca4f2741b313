import os
import sys
import importlib

from errors import UsageError
from preconditioner import Preconditioner

PRECONDITIONERS = {}

current_dir = os.path.dirname(os.path.abspath(__file__))
for file in sorted(os.listdir(current_dir)):
    if file.endswith(".py") and not file.startswith("__"):
        module_name = file[:-3]
        module = importlib.import_module(f".{module_name}", package=__name__)
        for name, value in vars(module).items():
            if getattr(value, "__module__", None) != module.__name__:
                continue
            if isinstance(value, type) and issubclass(value, Preconditioner):
                PRECONDITIONERS[value.key] = value
                setattr(sys.modules[__name__], name, value)
            elif name.startswith("build_"):
                setattr(sys.modules[__name__], name, value)

PRECONDITIONER_CHOICES = sorted(PRECONDITIONERS)


def build_preconditioner(key, system, **options) -> Preconditioner:
    if key not in PRECONDITIONERS:
        raise UsageError(
            f"Unknown preconditioner: {key}. Choose from {PRECONDITIONER_CHOICES}"
        )
    return PRECONDITIONERS[key].from_system(system, **options)
