import asyncio
import logging
from typing import List, Optional

from app.data.models import DimensionRecord
from app.services.relations import quotient_space
from app.services.spectral.antidiagonal import e2_antidiagonal_dim

logger = logging.getLogger(__name__)

TABLE_COLUMNS = (
    "chords_mod_4T_SEP",
    "feynman_mod_STU_SEP",
    "AIkn_mod_IHX_STU2_SEP",
    "barAI1n_mod_IHX",
    "e2_antidiagonal",
)


def dimension(model: str, n: int, k: Optional[int] = None) -> DimensionRecord:
    if model == "e2_antidiagonal":
        return DimensionRecord(degree=n, model=model, dim=e2_antidiagonal_dim(n))
    if model == "AIkn_mod_IHX_STU2_SEP" and k is None:
        k = 1
    space = quotient_space(model, n, k)
    return DimensionRecord(degree=n, model=model, k=space.k, dim=space.dim)


async def _dimension_async(model: str, n: int) -> DimensionRecord:
    try:
        return await asyncio.to_thread(dimension, model, n)
    except Exception as e:
        logger.error(f"dimension of {model} in degree {n} failed: {e}", exc_info=True)
        raise


async def dimension_table(max_degree: int) -> List[DimensionRecord]:
    """Every model in every degree 1..max_degree, sorted by (degree, model)."""
    tasks = [_dimension_async(model, n) for n in range(1, max_degree + 1) for model in TABLE_COLUMNS]
    records = await asyncio.gather(*tasks)
    return sorted(records, key=lambda record: (record.degree, record.model))

