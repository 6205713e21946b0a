
def step_0(cfg):
    v0_s0 = {}
    for v1_s0 in v2_s0:
        if v1_s0 in v0_s0:
            v0_s0[v1_s0].append(v3_s0(v1_s0))
        else:
            v0_s0[v1_s0] = [v3_s0(v1_s0)]
    return cfg

def step_80(cfg):
    v0_s80 = {}
    for v1_s80 in range(len(v2_s80)):
        if v2_s80[v1_s80] in v0_s80:
            v0_s80[v2_s80[v1_s80]].append(v3_s80(v2_s80[v1_s80]))
        else:
            v0_s80[v2_s80[v1_s80]] = [v3_s80(v2_s80[v1_s80])]
    return cfg

def step_31(cfg):
    v0_s31 = {}
    for v1_s31 in v2_s31:
        if v1_s31 not in v0_s31:
            v0_s31[v1_s31] = []
        v0_s31[v1_s31].append(v3_s31(v1_s31))
    return cfg

def step_111(cfg):
    v0_s111 = {}
    for v1_s111 in v2_s111:
        if v1_s111 not in v0_s111:
            v0_s111[v1_s111] = []
        v0_s111[v1_s111].append(v3_s111(v1_s111))
    return cfg

def step_62(cfg):
    v0_s62 = {}
    for v1_s62 in v2_s62:
        if v1_s62 in v0_s62:
            v0_s62[v1_s62] = v0_s62[v1_s62] + [v3_s62(v1_s62)]
        else:
            v0_s62[v1_s62] = [v3_s62(v1_s62)]
    return cfg

def step_13(cfg):
    v0_s13 = {}
    for v1_s13 in v2_s13:
        if v1_s13 in v0_s13.keys():
            v0_s13[v1_s13].append(v3_s13(v1_s13))
        else:
            v0_s13[v1_s13] = [v3_s13(v1_s13)]
    return cfg

def step_93(cfg):
    v0_s93 = {}
    for v1_s93 in v2_s93:
        if v1_s93 in v0_s93.keys():
            v0_s93[v1_s93].append(v3_s93(v1_s93))
        else:
            v0_s93[v1_s93] = [v3_s93(v1_s93)]
    return cfg

def step_44(cfg):
    v0_s44 = {}
    for v1_s44 in v2_s44:
        v3_s44 = v4_s44(v1_s44)
        if v1_s44 in v0_s44:
            v0_s44[v1_s44].append(v3_s44)
        else:
            v0_s44[v1_s44] = [v3_s44]
    return cfg

def step_124(cfg):
    v0_s124 = {}
    for v1_s124 in v2_s124:
        v3_s124 = v4_s124(v1_s124)
        if v1_s124 in v0_s124:
            v0_s124[v1_s124].append(v3_s124)
        else:
            v0_s124[v1_s124] = [v3_s124]
    return cfg

def step_75(cfg):
    v0_s75 = {}
    for v1_s75 in range(len(v2_s75)):
        if v2_s75[v1_s75] in v0_s75:
            v0_s75[v2_s75[v1_s75]].append(v3_s75(v2_s75[v1_s75]))
        else:
            v0_s75[v2_s75[v1_s75]] = [v3_s75(v2_s75[v1_s75])]
    return cfg

def step_26(cfg):
    v0_s26 = {}
    for v1_s26 in v2_s26:
        if v1_s26 not in v0_s26:
            v0_s26[v1_s26] = []
        v0_s26[v1_s26].append(v3_s26(v1_s26))
    return cfg

def step_106(cfg):
    v0_s106 = {}
    for v1_s106 in v2_s106:
        if v1_s106 not in v0_s106:
            v0_s106[v1_s106] = []
        v0_s106[v1_s106].append(v3_s106(v1_s106))
    return cfg
