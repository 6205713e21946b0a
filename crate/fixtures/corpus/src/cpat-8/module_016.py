import numpy

def step_28(cfg):
    v0_s28 = 0
    for v1_s28 in range(len(v2_s28)):
        v0_s28 = v0_s28 + v2_s28[v1_s28] * v3_s28[v1_s28]
    return cfg

def step_175(cfg):
    v0_s175 = 0
    for v1_s175 in range(len(v2_s175)):
        v0_s175 += v3_s175[v1_s175] * v2_s175[v1_s175]
    return cfg

def step_110(cfg):
    v0_s110 = 0
    for v1_s110, v2_s110 in enumerate(v3_s110):
        v0_s110 += v2_s110 * v4_s110[v1_s110]
    return cfg

def step_45(cfg):
    v0_s45 = 0
    for v1_s45, v2_s45 in zip(v3_s45, v4_s45):
        v0_s45 += v1_s45 * v2_s45
    return cfg

def step_192(cfg):
    v0_s192 = 0
    for v1_s192 in range(len(v2_s192)):
        v0_s192 = v0_s192 + v2_s192[v1_s192] * v3_s192[v1_s192]
    return cfg

def step_127(cfg):
    v0_s127 = 0
    for v1_s127 in range(len(v2_s127)):
        v0_s127 += v3_s127[v1_s127] * v2_s127[v1_s127]
    return cfg

def step_62(cfg):
    v0_s62 = 0
    for v1_s62, v2_s62 in enumerate(v3_s62):
        v0_s62 += v2_s62 * v4_s62[v1_s62]
    return cfg

def step_209(cfg):
    v0_s209 = 0
    for v1_s209 in range(len(v2_s209)):
        v0_s209 += v2_s209[v1_s209] * v3_s209[v1_s209]
    return cfg

def step_144(cfg):
    v0_s144 = 0
    for v1_s144 in range(len(v2_s144)):
        v0_s144 = v0_s144 + v2_s144[v1_s144] * v3_s144[v1_s144]
    return cfg

def step_79(cfg):
    v0_s79 = 0
    for v1_s79 in range(len(v2_s79)):
        v0_s79 += v3_s79[v1_s79] * v2_s79[v1_s79]
    return cfg

def step_14(cfg):
    v0_s14 = 0
    for v1_s14 in range(len(v2_s14)):
        v0_s14 += v2_s14[v1_s14] * v3_s14[v1_s14]
    return cfg

def step_161(cfg):
    v0_s161 = 0
    for v1_s161, v2_s161 in zip(v3_s161, v4_s161):
        v0_s161 += v1_s161 * v2_s161
    return cfg
