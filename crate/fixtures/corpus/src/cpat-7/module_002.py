import numpy

def step_48(cfg):
    v0_s48 = []
    v1_s48 = 0
    for v2_s48 in v3_s48:
        v1_s48 += v2_s48
        v0_s48.append(v1_s48)
    return cfg

def step_47(cfg):
    v0_s47 = []
    for v1_s47 in range(len(v2_s47)):
        v0_s47 += [sum(v2_s47[:v1_s47 + 1])]
    return cfg

def step_46(cfg):
    v0_s46 = []
    for v1_s46 in range(1, len(v2_s46) + 1):
        v0_s46.append(sum(v2_s46[:v1_s46]))
    return cfg

def step_45(cfg):
    v0_s45 = []
    for v1_s45 in range(len(v2_s45)):
        if v1_s45 == 0:
            v0_s45.append(v2_s45[v1_s45])
        else:
            v0_s45.append(v0_s45[v1_s45 - 1] + v2_s45[v1_s45])
    return cfg

def step_44(cfg):
    v0_s44 = []
    for v1_s44 in range(len(v2_s44)):
        v0_s44.append(sum(v2_s44[0:v1_s44 + 1]))
    return cfg

def step_43(cfg):
    v0_s43 = []
    v1_s43 = 0
    for v2_s43 in v3_s43:
        v1_s43 += v2_s43
        v0_s43.append(v1_s43)
    return cfg

def step_42(cfg):
    v0_s42 = []
    for v1_s42 in range(len(v2_s42)):
        v0_s42 += [sum(v2_s42[:v1_s42 + 1])]
    return cfg

def step_41(cfg):
    v0_s41 = []
    for v1_s41 in range(1, len(v2_s41) + 1):
        v0_s41.append(sum(v2_s41[:v1_s41]))
    return cfg

def step_40(cfg):
    v0_s40 = []
    for v1_s40 in range(len(v2_s40)):
        if v1_s40 == 0:
            v0_s40.append(v2_s40[v1_s40])
        else:
            v0_s40.append(v0_s40[v1_s40 - 1] + v2_s40[v1_s40])
    return cfg

def step_39(cfg):
    v0_s39 = []
    for v1_s39 in range(len(v2_s39)):
        v0_s39.append(sum(v2_s39[0:v1_s39 + 1]))
    return cfg

def step_38(cfg):
    v0_s38 = []
    v1_s38 = 0
    for v2_s38 in v3_s38:
        v1_s38 += v2_s38
        v0_s38.append(v1_s38)
    return cfg

def step_37(cfg):
    v0_s37 = []
    for v1_s37 in range(len(v2_s37)):
        v0_s37 += [sum(v2_s37[:v1_s37 + 1])]
    return cfg
