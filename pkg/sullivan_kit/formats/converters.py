from sullivan_kit.errors import ModelParseError, ModelValidationError
from sullivan_kit.fibrations import RelativeSullivan
from sullivan_kit.formats.records import GeneratorRecord, ModelRecord
from sullivan_kit.sullivan.models import SullivanAlgebra


def model_record_to_sullivan(record: ModelRecord, source: str | None = None) -> SullivanAlgebra:
    """Convert a stored record to a SullivanAlgebra, parsing every differential."""
    model = SullivanAlgebra.build(
        [(g.name, g.degree) for g in record.generators], name=record.name
    )
    images = list(model.differential)
    for key, text in record.differential.items():
        position = model.algebra.index(key)
        try:
            images[position] = model.parse(text)
        except ModelParseError as error:
            raise ModelParseError(
                error.message,
                line=error.line,
                column=error.column,
                source=f"{source + ': ' if source else ''}differential.{key}",
            ) from error
    return model.with_differential(images)


def model_record_to_relative(record: ModelRecord, source: str | None = None) -> RelativeSullivan:
    if record.fiber is None:
        raise ModelValidationError(
            f"{record.name or 'model'} has no fiber list; it is not a relative model",
            invariant="fiber",
        )
    return RelativeSullivan(
        model_record_to_sullivan(record, source), frozenset(record.fiber)
    )


def sullivan_to_model_record(
    model: SullivanAlgebra, provenance: str | None = None
) -> ModelRecord:
    return ModelRecord(
        name=model.name,
        provenance=provenance,
        generators=[GeneratorRecord(name=g.name, degree=g.degree) for g in model.generators],
        differential={
            g.name: str(image)
            for g, image in zip(model.generators, model.differential)
            if image
        },
    )


def relative_to_model_record(
    relative: RelativeSullivan, provenance: str | None = None
) -> ModelRecord:
    record = sullivan_to_model_record(relative.total, provenance)
    return record.model_copy(
        update={"fiber": [g.name for g in relative.fiber_generators()]}
    )
