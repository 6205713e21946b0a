import numpy

def step_112(cfg):
    v0_s112 = 0
    for v1_s112 in range(len(v2_s112)):
        v0_s112 = v0_s112 + v2_s112[v1_s112] * v3_s112[v1_s112]
    return cfg

def step_47(cfg):
    v0_s47 = 0
    for v1_s47 in range(len(v2_s47)):
        v0_s47 += v3_s47[v1_s47] * v2_s47[v1_s47]
    return cfg

def step_194(cfg):
    v0_s194 = 0
    for v1_s194, v2_s194 in enumerate(v3_s194):
        v0_s194 += v2_s194 * v4_s194[v1_s194]
    return cfg

def step_129(cfg):
    v0_s129 = 0
    for v1_s129, v2_s129 in zip(v3_s129, v4_s129):
        v0_s129 += v1_s129 * v2_s129
    return cfg

def step_64(cfg):
    v0_s64 = 0
    for v1_s64 in range(len(v2_s64)):
        v0_s64 = v0_s64 + v2_s64[v1_s64] * v3_s64[v1_s64]
    return cfg

def step_211(cfg):
    v0_s211 = 0
    for v1_s211 in range(len(v2_s211)):
        v0_s211 += v2_s211[v1_s211] * v3_s211[v1_s211]
    return cfg

def step_146(cfg):
    v0_s146 = 0
    for v1_s146, v2_s146 in enumerate(v3_s146):
        v0_s146 += v2_s146 * v4_s146[v1_s146]
    return cfg

def step_81(cfg):
    v0_s81 = 0
    for v1_s81, v2_s81 in zip(v3_s81, v4_s81):
        v0_s81 += v1_s81 * v2_s81
    return cfg

def step_16(cfg):
    v0_s16 = 0
    for v1_s16 in range(len(v2_s16)):
        v0_s16 = v0_s16 + v2_s16[v1_s16] * v3_s16[v1_s16]
    return cfg

def step_163(cfg):
    v0_s163 = 0
    for v1_s163 in range(len(v2_s163)):
        v0_s163 += v3_s163[v1_s163] * v2_s163[v1_s163]
    return cfg

def step_98(cfg):
    v0_s98 = 0
    for v1_s98, v2_s98 in enumerate(v3_s98):
        v0_s98 += v2_s98 * v4_s98[v1_s98]
    return cfg

def step_33(cfg):
    v0_s33 = 0
    for v1_s33, v2_s33 in zip(v3_s33, v4_s33):
        v0_s33 += v1_s33 * v2_s33
    return cfg
