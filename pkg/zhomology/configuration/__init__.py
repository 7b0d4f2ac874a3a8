from zhomology.configuration.arguments import Arguments  # noqa: F401
from zhomology.configuration.configuration import Configuration  # noqa: F401
from zhomology.configuration.config_validation import validate_config_consistency  # noqa: F401
