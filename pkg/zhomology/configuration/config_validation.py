import logging
from typing import Any, Dict

from jsonschema import Draft4Validator, validators
from jsonschema.exceptions import ValidationError, best_match

from zhomology import OperationalException, constants


logger = logging.getLogger(__name__)


def _extend_validator(validator_class):
    """
    Draft 4 validator that also writes schema defaults into the validated config,
    nested objects included.
    """
    validate_properties = validator_class.VALIDATORS['properties']

    def set_defaults(validator, properties, instance, schema):
        for prop, subschema in properties.items():
            if 'default' in subschema:
                instance.setdefault(prop, subschema['default'])

        for error in validate_properties(
            validator, properties, instance, schema,
        ):
            yield error

    return validators.extend(
        validator_class, {'properties': set_defaults}
    )


ZhomologyValidator = _extend_validator(Draft4Validator)


def validate_config_schema(conf: Dict[str, Any]) -> Dict[str, Any]:
    """
    Check the merged configuration against CONF_SCHEMA and fill in defaults.
    :param conf: merged configuration
    :return: the same dict, completed with defaults
    :raises OperationalException: on the most relevant schema error
    """
    try:
        ZhomologyValidator(constants.CONF_SCHEMA).validate(conf)
        return conf
    except ValidationError as e:
        logger.critical(f"Invalid configuration. Reason: {e.message}")
        raise OperationalException(
            'Invalid configuration: '
            + best_match(Draft4Validator(constants.CONF_SCHEMA).iter_errors(conf)).message
        )


def validate_config_consistency(conf: Dict[str, Any]) -> None:
    """
    Reject option combinations the schema cannot express.
    Runs after files and cli flags are merged.
    :raises OperationalException: on a conflicting combination
    """
    _validate_field(conf)


def _validate_field(conf: Dict[str, Any]) -> None:
    """
    Field coefficients replace the integer computation, so they neither combine with the
    oracle path nor apply to spectral sequence commands.
    """
    if conf.get('field') is None:
        return

    if conf.get('use_oracle'):
        raise OperationalException(
            'The oracle computes integer groups only, --field and --oracle cannot be combined.')

    if conf.get('command') in constants.SPECTRAL_COMMANDS:
        raise OperationalException(
            f"A coefficient field is not supported by {conf['command']}, "
            "remove `field` from your configuration.")
