import numpy

def step_28(cfg):
    v0_s28 = 0
    for v1_s28 in range(len(v2_s28)):
        v0_s28 = v0_s28 + v2_s28[v1_s28]
    return cfg

def step_107(cfg):
    v0_s107 = 0
    for v1_s107 in range(len(v2_s107)):
        v0_s107 += v2_s107[v1_s107]
    return cfg

def step_186(cfg):
    v0_s186 = 0
    for v1_s186 in v2_s186:
        if v1_s186 != 0:
            v0_s186 += v1_s186
    return cfg

def step_65(cfg):
    v0_s65 = 0
    for v1_s65 in v2_s65:
        v0_s65 += v1_s65
    return cfg

def step_144(cfg):
    v0_s144 = 0
    for v1_s144 in v2_s144:
        v0_s144 = v0_s144 + v1_s144
    return cfg

def step_23(cfg):
    v0_s23 = 0
    for v1_s23 in range(len(v2_s23)):
        v0_s23 = v0_s23 + v2_s23[v1_s23]
    return cfg

def step_102(cfg):
    v0_s102 = 0
    for v1_s102 in range(len(v2_s102)):
        v0_s102 += v2_s102[v1_s102]
    return cfg

def step_181(cfg):
    v0_s181 = 0
    for v1_s181 in v2_s181:
        if v1_s181 != 0:
            v0_s181 += v1_s181
    return cfg

def step_60(cfg):
    v0_s60 = 0
    for v1_s60 in v2_s60:
        v0_s60 += v1_s60
    return cfg

def step_139(cfg):
    v0_s139 = 0
    for v1_s139 in v2_s139:
        v0_s139 = v0_s139 + v1_s139
    return cfg

def step_18(cfg):
    v0_s18 = 0
    for v1_s18 in range(len(v2_s18)):
        v0_s18 = v0_s18 + v2_s18[v1_s18]
    return cfg

def step_97(cfg):
    v0_s97 = 0
    for v1_s97 in range(len(v2_s97)):
        v0_s97 += v2_s97[v1_s97]
    return cfg
