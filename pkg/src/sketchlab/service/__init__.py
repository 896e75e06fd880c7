from .handlers import (InputError, handle_check, handle_demo, handle_entail,
                       handle_eval, handle_health, handle_prove,
                       handle_saturate, handle_translate)

__all__ = [
    "InputError",
    "handle_check",
    "handle_demo",
    "handle_entail",
    "handle_eval",
    "handle_health",
    "handle_prove",
    "handle_saturate",
    "handle_translate",
]
