from app.commands.dims import dims
from app.commands.normalize import normalize
from app.commands.table import snapshot, table
from app.commands.verify import verify

__all__ = ['dims', 'normalize', 'snapshot', 'table', 'verify']
