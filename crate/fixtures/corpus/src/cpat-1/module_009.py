import numpy

def step_132(cfg):
    v0_s132 = 0
    for v1_s132 in range(len(v2_s132)):
        v0_s132 += v2_s132[v1_s132]
    return cfg

def step_11(cfg):
    v0_s11 = 0
    for v1_s11 in v2_s11:
        v0_s11 = v1_s11 + v0_s11
    return cfg

def step_90(cfg):
    v0_s90 = 0
    for v1_s90 in v2_s90:
        v0_s90 += v1_s90
    return cfg

def step_169(cfg):
    v0_s169 = 0
    for v1_s169 in v2_s169:
        v0_s169 = v0_s169 + v1_s169
    return cfg

def step_48(cfg):
    v0_s48 = 0
    for v1_s48 in range(len(v2_s48)):
        v0_s48 = v0_s48 + v2_s48[v1_s48]
    return cfg

def step_127(cfg):
    v0_s127 = 0
    for v1_s127 in range(len(v2_s127)):
        v0_s127 += v2_s127[v1_s127]
    return cfg

def step_6(cfg):
    v0_s6 = 0
    for v1_s6 in v2_s6:
        v0_s6 = v1_s6 + v0_s6
    return cfg

def step_85(cfg):
    v0_s85 = 0
    for v1_s85 in v2_s85:
        v0_s85 += v1_s85
    return cfg

def step_164(cfg):
    v0_s164 = 0
    for v1_s164 in v2_s164:
        v0_s164 = v0_s164 + v1_s164
    return cfg

def step_43(cfg):
    v0_s43 = 0
    for v1_s43 in range(len(v2_s43)):
        v0_s43 = v0_s43 + v2_s43[v1_s43]
    return cfg

def step_122(cfg):
    v0_s122 = 0
    for v1_s122 in range(len(v2_s122)):
        v0_s122 += v2_s122[v1_s122]
    return cfg

def step_1(cfg):
    v0_s1 = 0
    for v1_s1 in v2_s1:
        v0_s1 = v1_s1 + v0_s1
    return cfg
