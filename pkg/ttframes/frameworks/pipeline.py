from typing import Optional

from ttframes.frameworks.logging_config import get_logger
from ttframes.frameworks.system_file_loader import TextSystemLoader
from ttframes.usecases.theorem_suite_use_case import TheoremSuiteUseCase


logger = get_logger(__name__)


def create_pipeline(
    max_objects: int = 16,
    search_bound: int = 12,
    uniqueness_exhaustive_limit: int = 8,
    strict: bool = False,
    corpus_size: int = 20,
    workers: Optional[int] = None,
) -> TheoremSuiteUseCase:
    """
    Create a fully configured theorem suite.

    Args:
        max_objects: Largest system whose thick ideals are enumerated
        search_bound: Largest space searched for homeomorphisms
        uniqueness_exhaustive_limit: Largest Zariski frame whose mediating maps are enumerated
        strict: Whether a prime that is not completely prime aborts verification
        corpus_size: Number of supports generated per system
        workers: Thread count for seed campaigns (None lets the executor decide)

    Returns:
        TheoremSuiteUseCase: Configured use case ready for verification
    """
    logger.info(
        f"Creating theorem suite - Max objects: {max_objects}, "
        f"Search bound: {search_bound}, "
        f"Uniqueness limit: {uniqueness_exhaustive_limit}, "
        f"Strict: {strict}, Corpus size: {corpus_size}"
    )

    logger.debug("Initializing text system loader")
    loader = TextSystemLoader()

    logger.debug("Creating theorem suite use case")
    use_case = TheoremSuiteUseCase(
        loader=loader,
        max_objects=max_objects,
        search_bound=search_bound,
        uniqueness_exhaustive_limit=uniqueness_exhaustive_limit,
        strict=strict,
        corpus_size=corpus_size,
        workers=workers,
    )

    logger.info("Theorem suite created successfully")
    return use_case
