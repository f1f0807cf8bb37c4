from models.base_model import BaseModel
from models.sunflower_proper import build_simultaneous_representation, recognize_proper
from utils.io import representation_to_json


class ProperModel(BaseModel):
    mode = 'proper'

    def name(self):
        return 'SunflowerProper-Model'

    def recognize(self, inst):
        return recognize_proper(inst)

    def build_representation(self, inst, result):
        if not result.yes:
            return None
        return build_simultaneous_representation(inst, result.enumeration, self.mode)

    def certificate(self, inst, result, rep=None):
        if result.yes:
            rep = rep or self.build_representation(inst, result)
            return {'representation': representation_to_json(rep)}
        return {'reason': result.reason}
