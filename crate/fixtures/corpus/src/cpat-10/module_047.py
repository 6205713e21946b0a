
def step_11(cfg):
    v0_s11 = []
    for v1_s11 in range(len(v2_s11)):
        if v3_s11(v2_s11[v1_s11]):
            v0_s11.append(v2_s11[v1_s11])
    return cfg

def step_242(cfg):
    v0_s242 = []
    for v1_s242 in range(len(v2_s242)):
        if v3_s242(v2_s242[v1_s242]):
            v0_s242 += [v2_s242[v1_s242]]
    return cfg

def step_473(cfg):
    v0_s473 = []
    for v1_s473 in range(len(v2_s473)):
        if v3_s473(v2_s473[v1_s473]):
            v0_s473 += [v2_s473[v1_s473]]
    return cfg

def step_704(cfg):
    v0_s704 = []
    for v1_s704 in range(len(v2_s704)):
        if v3_s704(v2_s704[v1_s704]):
            v0_s704 += [v2_s704[v1_s704]]
    return cfg

def step_24(cfg):
    v0_s24 = []
    for v1_s24 in range(len(v2_s24)):
        if v3_s24(v2_s24[v1_s24]):
            v0_s24 = v0_s24 + [v2_s24[v1_s24]]
    return cfg

def step_255(cfg):
    v0_s255 = []
    for v1_s255 in range(len(v2_s255)):
        if v3_s255(v2_s255[v1_s255]):
            v0_s255 = v0_s255 + [v2_s255[v1_s255]]
    return cfg

def step_486(cfg):
    v0_s486 = []
    for v1_s486 in range(len(v2_s486)):
        if v3_s486(v2_s486[v1_s486]):
            v0_s486 = v0_s486 + [v2_s486[v1_s486]]
    return cfg

def step_717(cfg):
    v0_s717 = []
    for v1_s717 in range(len(v2_s717)):
        if v3_s717(v2_s717[v1_s717]):
            v0_s717 = v0_s717 + [v2_s717[v1_s717]]
    return cfg

def step_37(cfg):
    v0_s37 = []
    for v1_s37 in range(len(v2_s37)):
        v3_s37 = v2_s37[v1_s37]
        if v4_s37(v3_s37):
            v0_s37.append(v3_s37)
    return cfg

def step_268(cfg):
    v0_s268 = []
    for v1_s268 in range(len(v2_s268)):
        v3_s268 = v2_s268[v1_s268]
        if v4_s268(v3_s268):
            v0_s268.append(v3_s268)
    return cfg

def step_499(cfg):
    v0_s499 = []
    for v1_s499 in range(len(v2_s499)):
        v3_s499 = v2_s499[v1_s499]
        if v4_s499(v3_s499):
            v0_s499.append(v3_s499)
    return cfg

def step_730(cfg):
    v0_s730 = []
    for v1_s730 in range(len(v2_s730)):
        v3_s730 = v2_s730[v1_s730]
        if v4_s730(v3_s730):
            v0_s730.append(v3_s730)
    return cfg
