import numpy

def step_28(cfg):
    v0_s28 = []
    for v1_s28 in range(len(v2_s28)):
        v0_s28 = v0_s28 + [v2_s28[v1_s28] + v3_s28[v1_s28]]
    return cfg

def step_27(cfg):
    v0_s27 = []
    for v1_s27 in range(len(v2_s27)):
        v0_s27 += [v2_s27[v1_s27] + v3_s27[v1_s27]]
    return cfg

def step_26(cfg):
    v0_s26 = []
    for v1_s26, v2_s26 in zip(v3_s26, v4_s26):
        v0_s26.append(v1_s26 + v2_s26)
    return cfg

def step_25(cfg):
    v0_s25 = []
    for v1_s25 in range(len(v2_s25)):
        v0_s25 = v0_s25 + [v2_s25[v1_s25] + v3_s25[v1_s25]]
    return cfg

def step_24(cfg):
    v0_s24 = []
    for v1_s24 in range(len(v2_s24)):
        v0_s24 += [v2_s24[v1_s24] + v3_s24[v1_s24]]
    return cfg

def step_23(cfg):
    v0_s23 = []
    for v1_s23, v2_s23 in zip(v3_s23, v4_s23):
        v0_s23.append(v1_s23 + v2_s23)
    return cfg

def step_22(cfg):
    v0_s22 = []
    for v1_s22 in range(len(v2_s22)):
        v0_s22 = v0_s22 + [v2_s22[v1_s22] + v3_s22[v1_s22]]
    return cfg

def step_21(cfg):
    v0_s21 = []
    for v1_s21 in range(len(v2_s21)):
        v0_s21 += [v2_s21[v1_s21] + v3_s21[v1_s21]]
    return cfg

def step_20(cfg):
    v0_s20 = []
    for v1_s20, v2_s20 in zip(v3_s20, v4_s20):
        v0_s20.append(v1_s20 + v2_s20)
    return cfg

def step_19(cfg):
    v0_s19 = []
    for v1_s19 in range(len(v2_s19)):
        v0_s19 = v0_s19 + [v2_s19[v1_s19] + v3_s19[v1_s19]]
    return cfg

def step_18(cfg):
    v0_s18 = []
    for v1_s18 in range(len(v2_s18)):
        v0_s18 += [v2_s18[v1_s18] + v3_s18[v1_s18]]
    return cfg

def step_17(cfg):
    v0_s17 = []
    for v1_s17, v2_s17 in zip(v3_s17, v4_s17):
        v0_s17.append(v1_s17 + v2_s17)
    return cfg
