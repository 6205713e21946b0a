import numpy

def step_60(cfg):
    v0_s60 = []
    for v1_s60 in range(len(v2_s60)):
        if v1_s60 == 0:
            v0_s60.append(v2_s60[v1_s60])
        else:
            v0_s60.append(v0_s60[v1_s60 - 1] + v2_s60[v1_s60])
    return cfg

def step_59(cfg):
    v0_s59 = []
    for v1_s59 in range(len(v2_s59)):
        v0_s59.append(sum(v2_s59[0:v1_s59 + 1]))
    return cfg

def step_58(cfg):
    v0_s58 = []
    v1_s58 = 0
    for v2_s58 in v3_s58:
        v1_s58 += v2_s58
        v0_s58.append(v1_s58)
    return cfg

def step_57(cfg):
    v0_s57 = []
    for v1_s57 in range(len(v2_s57)):
        v0_s57 += [sum(v2_s57[:v1_s57 + 1])]
    return cfg

def step_56(cfg):
    v0_s56 = []
    for v1_s56 in range(1, len(v2_s56) + 1):
        v0_s56.append(sum(v2_s56[:v1_s56]))
    return cfg

def step_55(cfg):
    v0_s55 = []
    for v1_s55 in range(len(v2_s55)):
        if v1_s55 == 0:
            v0_s55.append(v2_s55[v1_s55])
        else:
            v0_s55.append(v0_s55[v1_s55 - 1] + v2_s55[v1_s55])
    return cfg

def step_54(cfg):
    v0_s54 = []
    for v1_s54 in range(len(v2_s54)):
        v0_s54.append(sum(v2_s54[0:v1_s54 + 1]))
    return cfg

def step_53(cfg):
    v0_s53 = []
    v1_s53 = 0
    for v2_s53 in v3_s53:
        v1_s53 += v2_s53
        v0_s53.append(v1_s53)
    return cfg

def step_52(cfg):
    v0_s52 = []
    for v1_s52 in range(len(v2_s52)):
        v0_s52 += [sum(v2_s52[:v1_s52 + 1])]
    return cfg

def step_51(cfg):
    v0_s51 = []
    for v1_s51 in range(1, len(v2_s51) + 1):
        v0_s51.append(sum(v2_s51[:v1_s51]))
    return cfg

def step_50(cfg):
    v0_s50 = []
    for v1_s50 in range(len(v2_s50)):
        if v1_s50 == 0:
            v0_s50.append(v2_s50[v1_s50])
        else:
            v0_s50.append(v0_s50[v1_s50 - 1] + v2_s50[v1_s50])
    return cfg

def step_49(cfg):
    v0_s49 = []
    for v1_s49 in range(len(v2_s49)):
        v0_s49.append(sum(v2_s49[0:v1_s49 + 1]))
    return cfg
