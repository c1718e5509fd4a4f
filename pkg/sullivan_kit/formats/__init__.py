from sullivan_kit.formats.converters import (
    model_record_to_relative,
    model_record_to_sullivan,
    relative_to_model_record,
    sullivan_to_model_record,
)
from sullivan_kit.formats.loader import (
    dumps_record,
    load_model,
    load_record,
    load_relative,
    loads_record,
)
from sullivan_kit.formats.records import GeneratorRecord, ModelRecord

__all__ = [
    "GeneratorRecord",
    "ModelRecord",
    "dumps_record",
    "load_model",
    "load_record",
    "load_relative",
    "loads_record",
    "model_record_to_relative",
    "model_record_to_sullivan",
    "relative_to_model_record",
    "sullivan_to_model_record",
]
