
def step_220(cfg):
    v0_s220 = []
    for v1_s220 in range(len(v2_s220)):
        v3_s220 = v2_s220[v1_s220]
        if v4_s220(v3_s220):
            v0_s220.append(v3_s220)
    return cfg

def step_451(cfg):
    v0_s451 = []
    for v1_s451 in range(len(v2_s451)):
        v3_s451 = v2_s451[v1_s451]
        if v4_s451(v3_s451):
            v0_s451.append(v3_s451)
    return cfg

def step_682(cfg):
    v0_s682 = []
    for v1_s682 in range(len(v2_s682)):
        v3_s682 = v2_s682[v1_s682]
        if v4_s682(v3_s682):
            v0_s682.append(v3_s682)
    return cfg

def step_2(cfg):
    v0_s2 = []
    for v1_s2 in range(len(v2_s2)):
        if v3_s2(v2_s2[v1_s2]):
            v0_s2.append(v2_s2[v1_s2])
    return cfg

def step_233(cfg):
    v0_s233 = []
    for v1_s233 in range(len(v2_s233)):
        if v3_s233(v2_s233[v1_s233]):
            v0_s233 += [v2_s233[v1_s233]]
    return cfg

def step_464(cfg):
    v0_s464 = []
    for v1_s464 in range(len(v2_s464)):
        if v3_s464(v2_s464[v1_s464]):
            v0_s464 += [v2_s464[v1_s464]]
    return cfg

def step_695(cfg):
    v0_s695 = []
    for v1_s695 in range(len(v2_s695)):
        if v3_s695(v2_s695[v1_s695]):
            v0_s695 += [v2_s695[v1_s695]]
    return cfg

def step_15(cfg):
    v0_s15 = []
    for v1_s15 in range(len(v2_s15)):
        if v3_s15(v2_s15[v1_s15]):
            v0_s15.append(v2_s15[v1_s15])
    return cfg

def step_246(cfg):
    v0_s246 = []
    for v1_s246 in range(len(v2_s246)):
        if v3_s246(v2_s246[v1_s246]):
            v0_s246 = v0_s246 + [v2_s246[v1_s246]]
    return cfg

def step_477(cfg):
    v0_s477 = []
    for v1_s477 in range(len(v2_s477)):
        if v3_s477(v2_s477[v1_s477]):
            v0_s477 = v0_s477 + [v2_s477[v1_s477]]
    return cfg

def step_708(cfg):
    v0_s708 = []
    for v1_s708 in range(len(v2_s708)):
        if v3_s708(v2_s708[v1_s708]):
            v0_s708 = v0_s708 + [v2_s708[v1_s708]]
    return cfg

def step_28(cfg):
    v0_s28 = []
    for v1_s28 in range(len(v2_s28)):
        v3_s28 = v2_s28[v1_s28]
        if v4_s28(v3_s28):
            v0_s28.append(v3_s28)
    return cfg
