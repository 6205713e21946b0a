import numpy

def step_172(cfg):
    v0_s172 = 0
    for v1_s172 in range(len(v2_s172)):
        v0_s172 = v0_s172 + v2_s172[v1_s172] * v3_s172[v1_s172]
    return cfg

def step_107(cfg):
    v0_s107 = 0
    for v1_s107 in range(len(v2_s107)):
        v0_s107 += v3_s107[v1_s107] * v2_s107[v1_s107]
    return cfg

def step_42(cfg):
    v0_s42 = 0
    for v1_s42, v2_s42 in enumerate(v3_s42):
        v0_s42 += v2_s42 * v4_s42[v1_s42]
    return cfg

def step_189(cfg):
    v0_s189 = 0
    for v1_s189, v2_s189 in zip(v3_s189, v4_s189):
        v0_s189 += v1_s189 * v2_s189
    return cfg

def step_124(cfg):
    v0_s124 = 0
    for v1_s124 in range(len(v2_s124)):
        v0_s124 = v0_s124 + v2_s124[v1_s124] * v3_s124[v1_s124]
    return cfg

def step_59(cfg):
    v0_s59 = 0
    for v1_s59 in range(len(v2_s59)):
        v0_s59 += v3_s59[v1_s59] * v2_s59[v1_s59]
    return cfg

def step_206(cfg):
    v0_s206 = 0
    for v1_s206, v2_s206 in enumerate(v3_s206):
        v0_s206 += v2_s206 * v4_s206[v1_s206]
    return cfg

def step_141(cfg):
    v0_s141 = 0
    for v1_s141, v2_s141 in zip(v3_s141, v4_s141):
        v0_s141 += v1_s141 * v2_s141
    return cfg

def step_76(cfg):
    v0_s76 = 0
    for v1_s76 in range(len(v2_s76)):
        v0_s76 = v0_s76 + v2_s76[v1_s76] * v3_s76[v1_s76]
    return cfg

def step_11(cfg):
    v0_s11 = 0
    for v1_s11 in range(len(v2_s11)):
        v0_s11 += v2_s11[v1_s11] * v3_s11[v1_s11]
    return cfg

def step_158(cfg):
    v0_s158 = 0
    for v1_s158, v2_s158 in enumerate(v3_s158):
        v0_s158 += v2_s158 * v4_s158[v1_s158]
    return cfg

def step_93(cfg):
    v0_s93 = 0
    for v1_s93, v2_s93 in zip(v3_s93, v4_s93):
        v0_s93 += v1_s93 * v2_s93
    return cfg
