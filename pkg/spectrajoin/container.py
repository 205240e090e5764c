"""
Dependency Injection Container

Wires configuration and services for the CLI.

Usage:
    container = create_container()
    service = container.resolve('search_service')
    pair = service.first_pair(10)
"""

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional

from .config import AppConfig
from .core import SpectraJoinException

Factory = Callable[["Container"], Any]

_UNBUILT = object()


class ServiceNotRegisteredException(SpectraJoinException):
    """Raised when a name has no registered factory."""

    pass


@dataclass
class _Registration:
    factory: Factory
    singleton: bool
    instance: Any = _UNBUILT


class Container:
    """Name -> factory registry; singletons are built on first resolve.

    A singleton factory may return None (the search cache does when caching
    is off); None is cached like any other instance.
    """

    def __init__(self):
        self._registry: Dict[str, _Registration] = {}

    def register(self, name: str, factory: Factory, singleton: bool = False) -> None:
        """Register (or replace) the factory for ``name``.

        Args:
            name: Service key.
            factory: Called with the container, so it can resolve dependencies.
            singleton: Build once and reuse.
        """
        self._registry[name] = _Registration(factory, singleton)

    def resolve(self, name: str) -> Any:
        """Build or fetch the service registered under ``name``.

        Raises:
            ServiceNotRegisteredException: For an unknown name.
        """
        entry = self._registry.get(name)
        if entry is None:
            raise ServiceNotRegisteredException(
                f"No service named '{name}'. Registered: {', '.join(self.names())}"
            )
        if not entry.singleton:
            return entry.factory(self)
        if entry.instance is _UNBUILT:
            entry.instance = entry.factory(self)
        return entry.instance

    def has(self, name: str) -> bool:
        return name in self._registry

    def names(self) -> List[str]:
        return sorted(self._registry)

    def clear_singletons(self) -> None:
        """Drop built singletons; the next resolve calls the factory again."""
        for entry in self._registry.values():
            entry.instance = _UNBUILT


def create_container(config: Optional[AppConfig] = None) -> Container:
    """Create the container with every service registered.

    Args:
        config: Application configuration; read from the environment if omitted.
    """
    container = Container()
    config = config or AppConfig.from_env()

    # ========================================
    # Configuration
    # ========================================

    container.register("config", lambda c: config, singleton=True)

    # ========================================
    # Infrastructure
    # ========================================

    container.register("batch_runner", _init_batch_runner, singleton=True)
    container.register("search_cache", _init_search_cache, singleton=True)

    # ========================================
    # Service Layer
    # ========================================

    container.register("search_service", _init_search_service, singleton=True)
    container.register("verification_service", _init_verification_service, singleton=True)

    return container


# ========================================
# Factories
# ========================================


def _init_batch_runner(container: Container):
    from .services.batch_runner import BatchRunner

    return BatchRunner(max_workers=container.resolve("config").search.max_workers)


def _init_search_cache(container: Container):
    """Search cache, or None when caching is disabled."""
    from .services.search_cache import SearchCache

    search = container.resolve("config").search
    return SearchCache(search.cache_dir) if search.cache_enabled else None


def _init_search_service(container: Container):
    from .services.search_service import RegularSearchService

    search = container.resolve("config").search
    return RegularSearchService(
        runner=container.resolve("batch_runner"),
        cache=container.resolve("search_cache"),
        max_vertices=search.max_vertices,
        degrees=search.degrees,
    )


def _init_verification_service(container: Container):
    from .services.verification_service import VerificationService

    config = container.resolve("config")
    return VerificationService(config.numeric, config.verify, container.resolve("batch_runner"))
