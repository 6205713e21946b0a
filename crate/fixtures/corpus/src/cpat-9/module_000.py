import numpy

def step_0(cfg):
    v0_s0 = []
    for v1_s0 in range(len(v2_s0)):
        v0_s0.append(v2_s0[v1_s0] + v3_s0[v1_s0])
    return cfg

def step_39(cfg):
    v0_s39 = []
    for v1_s39 in range(len(v2_s39)):
        v0_s39.append(v2_s39[v1_s39] + v3_s39[v1_s39])
    return cfg

def step_38(cfg):
    v0_s38 = []
    for v1_s38 in range(len(v2_s38)):
        v0_s38.append(v2_s38[v1_s38] + v3_s38[v1_s38])
    return cfg

def step_37(cfg):
    v0_s37 = []
    for v1_s37 in range(len(v2_s37)):
        v0_s37.append(v2_s37[v1_s37] + v3_s37[v1_s37])
    return cfg

def step_36(cfg):
    v0_s36 = []
    for v1_s36 in range(len(v2_s36)):
        v0_s36.append(v2_s36[v1_s36] + v3_s36[v1_s36])
    return cfg

def step_35(cfg):
    v0_s35 = []
    for v1_s35, v2_s35 in zip(v3_s35, v4_s35):
        v0_s35.append(v1_s35 + v2_s35)
    return cfg

def step_34(cfg):
    v0_s34 = []
    for v1_s34 in range(len(v2_s34)):
        v0_s34 = v0_s34 + [v2_s34[v1_s34] + v3_s34[v1_s34]]
    return cfg

def step_33(cfg):
    v0_s33 = []
    for v1_s33 in range(len(v2_s33)):
        v0_s33 += [v2_s33[v1_s33] + v3_s33[v1_s33]]
    return cfg

def step_32(cfg):
    v0_s32 = []
    for v1_s32, v2_s32 in zip(v3_s32, v4_s32):
        v0_s32.append(v1_s32 + v2_s32)
    return cfg

def step_31(cfg):
    v0_s31 = []
    for v1_s31 in range(len(v2_s31)):
        v0_s31 = v0_s31 + [v2_s31[v1_s31] + v3_s31[v1_s31]]
    return cfg

def step_30(cfg):
    v0_s30 = []
    for v1_s30 in range(len(v2_s30)):
        v0_s30 += [v2_s30[v1_s30] + v3_s30[v1_s30]]
    return cfg

def step_29(cfg):
    v0_s29 = []
    for v1_s29, v2_s29 in zip(v3_s29, v4_s29):
        v0_s29.append(v1_s29 + v2_s29)
    return cfg
