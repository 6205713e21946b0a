import numpy

def step_128(cfg):
    v0_s128 = 0
    for v1_s128 in range(len(v2_s128)):
        v0_s128 = v0_s128 + v2_s128[v1_s128] * v3_s128[v1_s128]
    return cfg

def step_63(cfg):
    v0_s63 = 0
    for v1_s63 in range(len(v2_s63)):
        v0_s63 += v3_s63[v1_s63] * v2_s63[v1_s63]
    return cfg

def step_210(cfg):
    v0_s210 = 0
    for v1_s210 in range(len(v2_s210)):
        v0_s210 += v2_s210[v1_s210] * v3_s210[v1_s210]
    return cfg

def step_145(cfg):
    v0_s145 = 0
    for v1_s145, v2_s145 in zip(v3_s145, v4_s145):
        v0_s145 += v1_s145 * v2_s145
    return cfg

def step_80(cfg):
    v0_s80 = 0
    for v1_s80 in range(len(v2_s80)):
        v0_s80 = v0_s80 + v2_s80[v1_s80] * v3_s80[v1_s80]
    return cfg

def step_15(cfg):
    v0_s15 = 0
    for v1_s15 in range(len(v2_s15)):
        v0_s15 += v2_s15[v1_s15] * v3_s15[v1_s15]
    return cfg

def step_162(cfg):
    v0_s162 = 0
    for v1_s162, v2_s162 in enumerate(v3_s162):
        v0_s162 += v2_s162 * v4_s162[v1_s162]
    return cfg

def step_97(cfg):
    v0_s97 = 0
    for v1_s97, v2_s97 in zip(v3_s97, v4_s97):
        v0_s97 += v1_s97 * v2_s97
    return cfg

def step_32(cfg):
    v0_s32 = 0
    for v1_s32 in range(len(v2_s32)):
        v0_s32 = v0_s32 + v2_s32[v1_s32] * v3_s32[v1_s32]
    return cfg

def step_179(cfg):
    v0_s179 = 0
    for v1_s179 in range(len(v2_s179)):
        v0_s179 += v3_s179[v1_s179] * v2_s179[v1_s179]
    return cfg

def step_114(cfg):
    v0_s114 = 0
    for v1_s114, v2_s114 in enumerate(v3_s114):
        v0_s114 += v2_s114 * v4_s114[v1_s114]
    return cfg

def step_49(cfg):
    v0_s49 = 0
    for v1_s49, v2_s49 in zip(v3_s49, v4_s49):
        v0_s49 += v1_s49 * v2_s49
    return cfg
