from django import forms
from django.utils.translation import gettext_lazy as _

from arith.services import INT64_MAX, INT64_MIN, is_prime
from localsym.models import Place
from quadfield.services import make_field, squarefree_range
from quatalg.models import ExtensionDescriptor, ExtensionKind

from .models import CommandName, OutputFormat, QuerySpec


class Int64Field(forms.IntegerField):
    def __init__(self, **kwargs):
        kwargs.setdefault("min_value", INT64_MIN)
        kwargs.setdefault("max_value", INT64_MAX)
        super().__init__(**kwargs)


class PrimeField(Int64Field):
    default_error_messages = {
        "not_prime": _("%(value)s no es un primo positivo."),
    }

    def validate(self, value):
        super().validate(value)
        # fuera de 64 bits lo rechaza max_value/min_value
        if value is not None and INT64_MIN <= value <= INT64_MAX and not is_prime(value):
            raise forms.ValidationError(
                self.error_messages["not_prime"], code="not_prime", params={"value": value}
            )


class NonzeroIntegerField(Int64Field):
    def validate(self, value):
        super().validate(value)
        if value == 0:
            raise forms.ValidationError(_("Debe ser distinto de cero."), code="zero")


class IntegerListField(forms.Field):
    """Lista de enteros tal como la deja argparse con action="append"."""

    def to_python(self, value):
        if not value:
            return []
        try:
            return [int(item) for item in value]
        except (TypeError, ValueError):
            raise forms.ValidationError(_("Introduzca enteros."), code="invalid")


class QueryForm(forms.Form):
    command = None

    def to_spec(self, output_format=OutputFormat.JSON):
        return QuerySpec(command=self.command, output_format=output_format, **self.spec_fields())

    def spec_fields(self):
        raise NotImplementedError


class HilbertForm(QueryForm):
    command = CommandName.HILBERT

    a = NonzeroIntegerField()
    b = NonzeroIntegerField()
    p = forms.CharField()

    def clean_p(self):
        return Place.parse(self.cleaned_data["p"])

    def spec_fields(self):
        data = self.cleaned_data
        return {"a": data["a"], "b": data["b"], "place": data["p"]}


class RamifyForm(QueryForm):
    command = CommandName.RAMIFY

    a = NonzeroIntegerField()
    b = NonzeroIntegerField()

    def spec_fields(self):
        return {"a": self.cleaned_data["a"], "b": self.cleaned_data["b"]}


class ClassifyForm(QueryForm):
    """
    Sin d ni alpha se clasifica sobre Q. Con d y sin --kind se usa el cuerpo
    cuadratico; con alpha y sin --kind, la cubica pura.
    """

    command = CommandName.CLASSIFY

    d = Int64Field(required=False)
    kind = forms.ChoiceField(choices=ExtensionKind.choices, required=False)
    ell = Int64Field(required=False)
    n = Int64Field(required=False, min_value=1)
    alpha = Int64Field(required=False)
    p = PrimeField()
    q = PrimeField()

    def _default_kind(self, data):
        if data.get("alpha") is not None:
            return ExtensionKind.KUMMER_CUBIC
        if data.get("d") is not None:
            return ExtensionKind.QUADRATIC
        return ExtensionKind.BASE_Q

    def clean(self):
        cleaned_data = super().clean()
        kind = cleaned_data.get("kind") or self._default_kind(cleaned_data)
        d, ell = cleaned_data.get("d"), cleaned_data.get("ell")

        if kind == ExtensionKind.BASE_Q:
            cleaned_data["extension"] = ExtensionDescriptor.base_q()
            return cleaned_data
        if kind == ExtensionKind.KUMMER_CUBIC:
            if cleaned_data.get("alpha") is None:
                raise forms.ValidationError(_("La cubica pura necesita --alpha."), code="required")
            cleaned_data["extension"] = ExtensionDescriptor.kummer_cubic(cleaned_data["alpha"])
            return cleaned_data

        if d is None:
            raise forms.ValidationError(_("Esta extension necesita --d."), code="required")
        F = make_field(d)
        if kind == ExtensionKind.QUADRATIC:
            cleaned_data["extension"] = ExtensionDescriptor.quadratic(F)
            return cleaned_data
        if ell is None:
            raise forms.ValidationError(_("Esta extension necesita --ell."), code="required")
        if kind == ExtensionKind.DIHEDRAL:
            cleaned_data["extension"] = ExtensionDescriptor.dihedral(F, ell)
        else:
            cleaned_data["extension"] = ExtensionDescriptor.unramified_abelian(
                F, ell, cleaned_data.get("n") or 1
            )
        return cleaned_data

    def spec_fields(self):
        data = self.cleaned_data
        return {"p": data["p"], "q": data["q"], "extension": data["extension"]}


class TableForm(QueryForm):
    command = CommandName.TABLE

    d_min = Int64Field(required=False)
    d_max = Int64Field(required=False)
    d = IntegerListField(required=False)
    prime_bound = Int64Field(min_value=0)
    include_engine = forms.BooleanField(required=False)

    def clean_d(self):
        values = self.cleaned_data["d"]
        for d in values:
            make_field(d)
        return values

    def clean(self):
        cleaned_data = super().clean()
        d_min, d_max = cleaned_data.get("d_min"), cleaned_data.get("d_max")
        if (d_min is None) != (d_max is None):
            raise forms.ValidationError(
                _("--d-min y --d-max van juntos."), code="incomplete_range"
            )
        if d_min is None and not cleaned_data.get("d") and "d" not in self.errors:
            raise forms.ValidationError(
                _("Indique un rango con --d-min/--d-max o valores con --d."), code="required"
            )
        values = set(cleaned_data.get("d") or ())
        if d_min is not None:
            values.update(squarefree_range(d_min, d_max))
        cleaned_data["d_values"] = tuple(sorted(values))
        return cleaned_data

    def spec_fields(self):
        data = self.cleaned_data
        return {
            "d_values": data["d_values"],
            "prime_bound": data["prime_bound"],
            "include_engine": data["include_engine"],
        }


class VerifyForm(QueryForm):
    command = CommandName.VERIFY

    d_max = Int64Field(min_value=0)
    prime_bound = Int64Field(min_value=0)
    threads = Int64Field(required=False, min_value=1)

    def spec_fields(self):
        data = self.cleaned_data
        d_max = data["d_max"]
        return {
            "d_values": tuple(squarefree_range(-d_max, d_max)),
            "prime_bound": data["prime_bound"],
            "threads": data["threads"],
        }


FORMS = {
    CommandName.HILBERT: HilbertForm,
    CommandName.RAMIFY: RamifyForm,
    CommandName.CLASSIFY: ClassifyForm,
    CommandName.TABLE: TableForm,
    CommandName.VERIFY: VerifyForm,
}
