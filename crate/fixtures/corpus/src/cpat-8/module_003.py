import numpy

def step_204(cfg):
    v0_s204 = 0
    for v1_s204 in range(len(v2_s204)):
        v0_s204 = v0_s204 + v2_s204[v1_s204] * v3_s204[v1_s204]
    return cfg

def step_139(cfg):
    v0_s139 = 0
    for v1_s139 in range(len(v2_s139)):
        v0_s139 += v3_s139[v1_s139] * v2_s139[v1_s139]
    return cfg

def step_74(cfg):
    v0_s74 = 0
    for v1_s74, v2_s74 in enumerate(v3_s74):
        v0_s74 += v2_s74 * v4_s74[v1_s74]
    return cfg

def step_9(cfg):
    v0_s9 = 0
    for v1_s9 in range(len(v2_s9)):
        v0_s9 += v2_s9[v1_s9] * v3_s9[v1_s9]
    return cfg

def step_156(cfg):
    v0_s156 = 0
    for v1_s156 in range(len(v2_s156)):
        v0_s156 = v0_s156 + v2_s156[v1_s156] * v3_s156[v1_s156]
    return cfg

def step_91(cfg):
    v0_s91 = 0
    for v1_s91 in range(len(v2_s91)):
        v0_s91 += v3_s91[v1_s91] * v2_s91[v1_s91]
    return cfg

def step_26(cfg):
    v0_s26 = 0
    for v1_s26, v2_s26 in enumerate(v3_s26):
        v0_s26 += v2_s26 * v4_s26[v1_s26]
    return cfg

def step_173(cfg):
    v0_s173 = 0
    for v1_s173, v2_s173 in zip(v3_s173, v4_s173):
        v0_s173 += v1_s173 * v2_s173
    return cfg

def step_108(cfg):
    v0_s108 = 0
    for v1_s108 in range(len(v2_s108)):
        v0_s108 = v0_s108 + v2_s108[v1_s108] * v3_s108[v1_s108]
    return cfg

def step_43(cfg):
    v0_s43 = 0
    for v1_s43 in range(len(v2_s43)):
        v0_s43 += v3_s43[v1_s43] * v2_s43[v1_s43]
    return cfg

def step_190(cfg):
    v0_s190 = 0
    for v1_s190, v2_s190 in enumerate(v3_s190):
        v0_s190 += v2_s190 * v4_s190[v1_s190]
    return cfg

def step_125(cfg):
    v0_s125 = 0
    for v1_s125, v2_s125 in zip(v3_s125, v4_s125):
        v0_s125 += v1_s125 * v2_s125
    return cfg
