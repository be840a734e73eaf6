# cli/serializers.py

from rest_framework import serializers

from core.exceptions import RationalParseError
from core.rationals import format_rational, rational


class RationalField(serializers.Field):
    """ Exact rational from `p/q`, an integer or a decimal string ("0.1" is 1/10). """

    default_error_messages = {
        'invalid': 'Expected a rational such as 3/2 or 0.25, got "{value}".',
    }

    def to_internal_value(self, data):
        try:
            return rational(data)
        except RationalParseError:
            self.fail('invalid', value=data)

    def to_representation(self, value):
        return format_rational(value)


# ============================
# Command option serializers
# ============================

class GenGTSerializer(serializers.Serializer):
    kappa = serializers.IntegerField(min_value=1)
    n = serializers.IntegerField(min_value=2)
    set_size = serializers.IntegerField(min_value=1)
    planted = serializers.BooleanField(default=False)
    seed = serializers.IntegerField(min_value=0)
    output = serializers.CharField(required=False)

    def validate(self, data):
        if data['set_size'] > data['n'] ** 2:
            raise serializers.ValidationError(
                {'set_size': f"At most n^2 = {data['n'] ** 2} distinct pairs exist."}
            )
        return data


class ReduceSerializer(serializers.Serializer):
    gt_file = serializers.CharField()
    graph_out = serializers.CharField()
    labels_out = serializers.CharField()


class SolveSerializer(serializers.Serializer):
    ALGORITHMS = ['exact', 'greedy', 'epas']

    graph = serializers.CharField()
    algo = serializers.ChoiceField(choices=ALGORITHMS)
    k = serializers.IntegerField(min_value=0)
    epsilon = RationalField(required=False)
    radius = RationalField(required=False)

    def validate(self, data):
        if data['algo'] == 'epas':
            if 'epsilon' not in data:
                raise serializers.ValidationError({'epsilon': "epas needs --epsilon."})
            if data['epsilon'] <= 0:
                raise serializers.ValidationError({'epsilon': "epsilon must be positive."})
        if 'radius' in data:
            if data['algo'] != 'exact':
                raise serializers.ValidationError({'radius': "--radius only applies to --algo exact."})
            if data['radius'] < 0:
                raise serializers.ValidationError({'radius': "radius must be non-negative."})
        elif data['k'] < 1:
            raise serializers.ValidationError({'k': "k must be at least 1."})
        return data


class VerifySerializer(serializers.Serializer):
    CHECKS = ['pathdec', 'hubs', 'doubling', 'claims', 'equivalence']

    graph = serializers.CharField()
    labels = serializers.CharField()
    check = serializers.ChoiceField(choices=CHECKS)
    r = RationalField(required=False)
    c = RationalField(required=False)

    def validate(self, data):
        if data['check'] == 'hubs':
            if 'r' not in data:
                raise serializers.ValidationError({'r': "the hubs check needs --r."})
            if data['r'] <= 0:
                raise serializers.ValidationError({'r': "r must be positive."})
        if 'c' in data and data['c'] < 4:
            raise serializers.ValidationError({'c': "c must be at least 4."})
        return data


class EquivalenceSerializer(serializers.Serializer):
    gt_file = serializers.CharField()


class ReportSerializer(serializers.Serializer):
    seed = serializers.IntegerField(min_value=0)
    instances = serializers.IntegerField(min_value=1, default=4)
