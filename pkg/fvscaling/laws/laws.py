from typing import Callable, Dict, List

from .advection import NAME as ADVECTION_REACTION, model_advection_reaction
from .burgers import NAME as BURGERS, model_burgers
from .model import ModelSpec
from .traffic import NAME as TRAFFIC, model_traffic


class UnknownModelError(KeyError):
    pass


registry: Dict[str, Callable[[], ModelSpec]] = {
    ADVECTION_REACTION: model_advection_reaction,
    BURGERS: model_burgers,
    TRAFFIC: model_traffic,
}


def model_names() -> List[str]:
    return list(registry)


def get_model(name: str) -> ModelSpec:
    """Build a registered model with the parameters of its published experiment."""
    if name not in registry:
        raise UnknownModelError(f'unknown model {name!r}, expected one of {", ".join(registry)}')
    return registry[name]()
