import numpy

def step_96(cfg):
    v0_s96 = 0
    for v1_s96 in range(len(v2_s96)):
        v0_s96 = v0_s96 + v2_s96[v1_s96] * v3_s96[v1_s96]
    return cfg

def step_31(cfg):
    v0_s31 = 0
    for v1_s31 in range(len(v2_s31)):
        v0_s31 += v3_s31[v1_s31] * v2_s31[v1_s31]
    return cfg

def step_178(cfg):
    v0_s178 = 0
    for v1_s178, v2_s178 in enumerate(v3_s178):
        v0_s178 += v2_s178 * v4_s178[v1_s178]
    return cfg

def step_113(cfg):
    v0_s113 = 0
    for v1_s113, v2_s113 in zip(v3_s113, v4_s113):
        v0_s113 += v1_s113 * v2_s113
    return cfg

def step_48(cfg):
    v0_s48 = 0
    for v1_s48 in range(len(v2_s48)):
        v0_s48 = v0_s48 + v2_s48[v1_s48] * v3_s48[v1_s48]
    return cfg

def step_195(cfg):
    v0_s195 = 0
    for v1_s195 in range(len(v2_s195)):
        v0_s195 += v3_s195[v1_s195] * v2_s195[v1_s195]
    return cfg

def step_130(cfg):
    v0_s130 = 0
    for v1_s130, v2_s130 in enumerate(v3_s130):
        v0_s130 += v2_s130 * v4_s130[v1_s130]
    return cfg

def step_65(cfg):
    v0_s65 = 0
    for v1_s65, v2_s65 in zip(v3_s65, v4_s65):
        v0_s65 += v1_s65 * v2_s65
    return cfg
