from fractions import Fraction

from models.base_model import BaseModel
from models.sunflower_unit import build_unit_representation, conflict_certificates, recognize_unit
from utils.io import representation_to_json


class UnitModel(BaseModel):
    mode = 'unit'

    def name(self):
        return 'SunflowerUnit-Model'

    def initialize(self, opt):
        BaseModel.initialize(self, opt)
        self.gap = Fraction(str(self.option('unit.gap', 1)))
        self.cap = int(self.option('enum_space.cap', 64))
        # scanning the enumeration space is exponential; only on request
        self.explain = bool(getattr(opt, 'explain', False))

    def recognize(self, inst):
        return recognize_unit(inst)

    def build_representation(self, inst, result):
        if not result.yes:
            return None
        return build_unit_representation(inst, result.enumeration, self.gap)

    def certificate(self, inst, result, rep=None):
        if result.yes:
            rep = rep or self.build_representation(inst, result)
            return {'representation': representation_to_json(rep)}
        out = {'reason': result.reason}
        if self.explain and result.proper is not None and result.proper.yes:
            out['conflicts'] = [conflict.to_json() for _, conflict in conflict_certificates(inst, self.cap)]
        return out
