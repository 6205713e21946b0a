import numpy

def step_0(cfg):
    v0_s0 = 0
    for v1_s0 in range(len(v2_s0)):
        v0_s0 += v2_s0[v1_s0] * v3_s0[v1_s0]
    return cfg

def step_147(cfg):
    v0_s147 = 0
    for v1_s147 in range(len(v2_s147)):
        v0_s147 += v3_s147[v1_s147] * v2_s147[v1_s147]
    return cfg

def step_82(cfg):
    v0_s82 = 0
    for v1_s82, v2_s82 in enumerate(v3_s82):
        v0_s82 += v2_s82 * v4_s82[v1_s82]
    return cfg

def step_17(cfg):
    v0_s17 = 0
    for v1_s17, v2_s17 in zip(v3_s17, v4_s17):
        v0_s17 += v1_s17 * v2_s17
    return cfg

def step_164(cfg):
    v0_s164 = 0
    for v1_s164 in range(len(v2_s164)):
        v0_s164 = v0_s164 + v2_s164[v1_s164] * v3_s164[v1_s164]
    return cfg

def step_99(cfg):
    v0_s99 = 0
    for v1_s99 in range(len(v2_s99)):
        v0_s99 += v3_s99[v1_s99] * v2_s99[v1_s99]
    return cfg

def step_34(cfg):
    v0_s34 = 0
    for v1_s34, v2_s34 in enumerate(v3_s34):
        v0_s34 += v2_s34 * v4_s34[v1_s34]
    return cfg

def step_181(cfg):
    v0_s181 = 0
    for v1_s181, v2_s181 in zip(v3_s181, v4_s181):
        v0_s181 += v1_s181 * v2_s181
    return cfg

def step_116(cfg):
    v0_s116 = 0
    for v1_s116 in range(len(v2_s116)):
        v0_s116 = v0_s116 + v2_s116[v1_s116] * v3_s116[v1_s116]
    return cfg

def step_51(cfg):
    v0_s51 = 0
    for v1_s51 in range(len(v2_s51)):
        v0_s51 += v3_s51[v1_s51] * v2_s51[v1_s51]
    return cfg

def step_198(cfg):
    v0_s198 = 0
    for v1_s198, v2_s198 in enumerate(v3_s198):
        v0_s198 += v2_s198 * v4_s198[v1_s198]
    return cfg

def step_133(cfg):
    v0_s133 = 0
    for v1_s133, v2_s133 in zip(v3_s133, v4_s133):
        v0_s133 += v1_s133 * v2_s133
    return cfg
